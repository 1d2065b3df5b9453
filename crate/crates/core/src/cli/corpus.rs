//! Enumeration of small quadratic irrationals.

use std::collections::HashSet;

use crate::quad::QuadraticIrrational;
use crate::scalar::{int, square_split, IntScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusBounds {
    /// `|u| <= u_max`
    pub u_max: i64,
    /// `1 <= v <= v_max`; a negative radical coefficient is not enumerated
    pub v_max: i64,
    /// `1 <= w <= w_max`
    pub w_max: i64,
    /// squarefree `2 <= D <= d_max`
    pub d_max: i64,
}

/// Every positive `(u + v sqrt(D)) / w` within the bounds, in canonical form
/// and without repeats, ordered by `D`, then `w`, `v`, `u`.
pub fn corpus<T: IntScalar>(b: CorpusBounds) -> Vec<QuadraticIrrational<T>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for d in 2..=b.d_max {
        let (k, _) = square_split(&int::<T>(d));
        if !k.is_one() {
            continue;
        }
        for w in 1..=b.w_max {
            for v in 1..=b.v_max {
                for u in -b.u_max..=b.u_max {
                    let Ok(q) = QuadraticIrrational::new(int(u), int(v), int(w), int(d)) else {
                        continue;
                    };
                    if q.is_positive() && seen.insert(q.clone()) {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}
