use lctpoly::geom::HPolyhedron;
use lctpoly::lct::lct_polytope_monomial;
use lctpoly::rational::{int, rat};
use lctpoly::sequence::{
    detect_stationary_limit, order_divergence_probe, tail_intersection, truncation_family,
};
use lctpoly::{MonomialIdeal, PolytopeSequence};

fn boxed(upper: &[lctpoly::Rational]) -> HPolyhedron {
    HPolyhedron::box_from_origin(upper).canonicalize().unwrap()
}

#[test]
fn ascending_chain_stabilizes() {
    // LCT((x², y^k)) = [0, 1/2 + 1/k] grows as k drops to 2.
    let seq = PolytopeSequence::new(8, |m| {
        let k = 7u32.saturating_sub(m as u32).max(2);
        lct_polytope_monomial(&[MonomialIdeal::new(2, vec![vec![2, 0], vec![0, k]])?])
    })
    .unwrap();
    let rep = detect_stationary_limit(&seq, 3).unwrap();
    assert!(rep.stationary);
    assert_eq!(rep.m0, Some(5));
    assert_eq!(rep.candidate_limit, boxed(&[int(1)]));
    assert_eq!(tail_intersection(&seq, 5).unwrap(), rep.candidate_limit);
    for m in 5..=8 {
        assert!(seq
            .term(m)
            .unwrap()
            .h()
            .contains_polyhedron(&rep.candidate_limit)
            .unwrap());
    }
    assert_eq!(rep.sq_distance_profile[0], (rat(1, 3)) * rat(1, 3));
}

#[test]
fn truncation_family_descends_to_the_ideal() {
    let a = MonomialIdeal::new(2, vec![vec![3, 0], vec![1, 1], vec![0, 4]]).unwrap();
    let limit = lct_polytope_monomial(std::slice::from_ref(&a)).unwrap();
    let seq = truncation_family(&[a], 7).unwrap();
    let terms = seq.terms().unwrap();
    for w in terms.windows(2) {
        assert!(w[0].h().contains_polyhedron(w[1].h()).unwrap());
    }
    assert!(terms[4..].iter().all(|t| t.same_set(&limit)));
}

#[test]
fn probe_flags_only_the_diverging_coordinate() {
    let constant = vec![MonomialIdeal::maximal(2); 5];
    let diverging: Vec<_> = (1..=5)
        .map(|m| MonomialIdeal::maximal_power(2, m))
        .collect();
    let probes = order_divergence_probe(&[constant, diverging]).unwrap();
    assert_eq!(probes.iter().filter(|p| p.flagged).count(), 1);
    assert!(probes[1].flagged);
    assert_eq!(probes[1].lct_upper_bounds.last().unwrap(), &rat(2, 5));
}
