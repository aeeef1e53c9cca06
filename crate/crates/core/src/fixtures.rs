//! Hand-derived log-resolution data for two pairs of plane curve germs at
//! the origin of the plane.

use crate::error::Result;
use crate::lct::ResolutionData;

/// `f = x`, `g = x − y²`, resolved by two point blow-ups.
///
/// The first blow-up (`E1`) leaves `E1` and both strict transforms through
/// one point; blowing that point up gives `E2`.
///
/// | divisor           | κ | ord f | ord g |
/// |-------------------|---|-------|-------|
/// | strict transform f| 0 | 1     | 0     |
/// | strict transform g| 0 | 0     | 1     |
/// | E1                | 1 | 1     | 1     |
/// | E2                | 2 | 2     | 2     |
pub fn smooth_and_tangent_parabola() -> Result<ResolutionData> {
    ResolutionData::new(
        2,
        vec![0, 0, 1, 2],
        vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 2]],
        vec![0, 1, 2, 3],
    )
}

/// Primitive weights of a regular fan refining the normal fans of both
/// `x² + y⁵` and `x⁵ + y²`.
pub const CUSP_PAIR_RAYS: [[u32; 2]; 7] = [[3, 1], [5, 2], [2, 1], [1, 1], [1, 2], [2, 5], [1, 3]];

/// `f = x² + y⁵`, `g = x⁵ + y²`, resolved torically.
///
/// Both are nondegenerate for their Newton polygons, so the toric
/// modification attached to [`CUSP_PAIR_RAYS`] is a log resolution. The
/// divisor of weight `w` has `κ = w₁ + w₂ − 1`, `ord f = min(2w₁, 5w₂)` and
/// `ord g = min(5w₁, 2w₂)`; the two strict transforms close the list.
pub fn cusp_pair() -> Result<ResolutionData> {
    let mut kappa = Vec::new();
    let mut alpha = Vec::new();
    for [a, b] in CUSP_PAIR_RAYS {
        kappa.push(a + b - 1);
        alpha.push(vec![(2 * a).min(5 * b), (5 * a).min(2 * b)]);
    }
    kappa.extend([0, 0]);
    alpha.extend([vec![1, 0], vec![0, 1]]);
    let through_x = (0..kappa.len()).collect();
    ResolutionData::new(2, kappa, alpha, through_x)
}
