//! Oracles shared by the integration tests. These deliberately avoid the
//! library's own field arithmetic: everything is plain `i128` on the tuple
//! `(u, v, w, d)` standing for `(u + v sqrt(d)) / w` with `w > 0`.

#![allow(dead_code)]

use toralg::quad::QuadraticIrrational;

pub type Q = (i128, i128, i128, i128);

pub fn tuple(q: &QuadraticIrrational<i128>) -> Q {
    (*q.u(), *q.v(), *q.w(), *q.radicand())
}

pub fn isqrt(n: i128) -> i128 {
    assert!(n >= 0);
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn is_square(n: i128) -> bool {
    n >= 0 && {
        let r = isqrt(n);
        r * r == n
    }
}

/// Sign of `a + b sqrt(d)` for nonsquare `d`.
pub fn sign_ab(a: i128, b: i128, d: i128) -> i32 {
    let (sa, sb) = (a.signum() as i32, b.signum() as i32);
    if sa == 0 {
        return sb;
    }
    if sb == 0 || sa == sb {
        return sa;
    }
    // opposite signs: compare a^2 with b^2 d
    let (a2, b2d) = (a * a, b * b * d);
    if a2 > b2d {
        sa
    } else {
        sb
    }
}

/// Sign of `m + n x`.
pub fn sign_lin(m: i128, n: i128, x: Q) -> i32 {
    let (u, v, w, d) = x;
    sign_ab(m * w + n * u, n * v, d)
}

/// `(m2, n2)` with `m2 + n2 beta = alpha (m1 + n1 beta)` when integral.
pub fn forced_second_row(alpha: Q, beta: Q, m1: i128, n1: i128) -> Option<(i128, i128)> {
    let (a, b, c, d) = alpha;
    let (u, v, w, d2) = beta;
    assert_eq!(d, d2);
    // alpha * (m1 + n1 beta) = (P + Q sqrt d) / (c w)
    let s = m1 * w + n1 * u;
    let p = a * s + b * n1 * v * d;
    let q = a * n1 * v + b * s;
    // n2 beta carries the radical: n2 v / w = q / (c w)
    if q % (c * v) != 0 {
        return None;
    }
    let n2 = q / (c * v);
    let rest = p - n2 * u * c;
    if rest % (c * w) != 0 {
        return None;
    }
    Some((rest / (c * w), n2))
}

/// Every `[[m1, n1], [m2, n2]]` with entries bounded by `bound`, determinant
/// `+-1`, `m1 + beta n1 > 0` and `m2 + beta n2 = alpha (m1 + beta n1)`.
pub fn iso_witnesses(alpha: Q, beta: Q, bound: i128, first_only: bool) -> Vec<[i128; 4]> {
    let mut out = Vec::new();
    if alpha.3 != beta.3 {
        return out;
    }
    for m1 in -bound..=bound {
        for n1 in -bound..=bound {
            if sign_lin(m1, n1, beta) <= 0 {
                continue;
            }
            if let Some((m2, n2)) = forced_second_row(alpha, beta, m1, n1) {
                let det = m1 * n2 - n1 * m2;
                if m2.abs() <= bound && n2.abs() <= bound && det.abs() == 1 {
                    out.push([m1, n1, m2, n2]);
                    if first_only {
                        return out;
                    }
                }
            }
        }
    }
    out
}

/// Exact check of the isomorphism condition, independent of the library.
pub fn is_iso_witness(m: [i128; 4], alpha: Q, beta: Q) -> bool {
    let [m1, n1, m2, n2] = m;
    (m1 * n2 - n1 * m2).abs() == 1
        && sign_lin(m1, n1, beta) > 0
        && forced_second_row(alpha, beta, m1, n1) == Some((m2, n2))
}

/// 2x2 integer matrix product, row-major.
pub fn mat_mul(a: [i128; 4], b: [i128; 4]) -> [i128; 4] {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

pub fn entries(m: &toralg::matrix::GlMatrix<i128>) -> [i128; 4] {
    [*m.m1(), *m.n1(), *m.m2(), *m.n2()]
}

/// Smallest `y > 0` (and its `x > 0`) with `x^2 - n y^2 = c`, scanning
/// `y <= limit`.
pub fn pell_scan(n: i128, c: i128, limit: i128) -> Option<(i128, i128)> {
    (1..=limit).find_map(|y| {
        let x2 = n * y * y + c;
        (x2 > 0 && is_square(x2)).then(|| (isqrt(x2), y))
    })
}
