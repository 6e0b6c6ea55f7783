#![allow(dead_code)]

use albert::octonion::{Algebra, Octonion};
use proptest::prelude::*;

pub fn octonion(algebra: Algebra) -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-1.0f64..1.0).prop_map(move |c| Octonion::new(c, algebra))
}

pub fn any_algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![Just(Algebra::Compact), Just(Algebra::Split)]
}

/// Real roots of `t^3 + a t^2 + b t + c` when all three are real, sorted
/// descending. Trigonometric form followed by Newton polishing; shares no
/// code with the library.
pub fn cubic_real_roots(a: f64, b: f64, c: f64) -> [f64; 3] {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let mut roots = if p.abs() < 1e-300 {
        let r = (-q).cbrt();
        [r, r, r]
    } else {
        let m = 2.0 * (-p / 3.0).max(0.0).sqrt();
        let arg = if m == 0.0 {
            0.0
        } else {
            (3.0 * q / (p * m)).clamp(-1.0, 1.0)
        };
        let theta = arg.acos() / 3.0;
        let tau = 2.0 * std::f64::consts::PI / 3.0;
        [0, 1, 2].map(|k| m * (theta - tau * k as f64).cos())
    };
    for r in &mut roots {
        *r -= shift;
        for _ in 0..3 {
            let f = ((*r + a) * *r + b) * *r + c;
            let df = (3.0 * *r + 2.0 * a) * *r + b;
            if df.abs() > 1e-8 {
                let step = f / df;
                if step.abs() < 1e-6 {
                    *r -= step;
                }
            }
        }
    }
    roots.sort_by(|x, y| y.total_cmp(x));
    roots
}
