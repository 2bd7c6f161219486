//! Exact Lagrange interpolation helpers shared by tests: polynomial limits
//! (value at 0) and evaluation at probe points, all over the rationals.

use crate::rat::Rat;
use num_traits::{One, Zero};

pub fn lagrange_at_zero(samples: &[(Rat, Rat)]) -> Rat {
    let mut total = Rat::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        let mut li = Rat::one();
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i != j {
                li *= -xj.clone() / (xi - xj);
            }
        }
        total += li * yi;
    }
    total
}

pub fn lagrange_eval(samples: &[(Rat, Rat)], at: &Rat) -> Rat {
    let mut total = Rat::zero();
    for (i, (xi, yi)) in samples.iter().enumerate() {
        let mut li = Rat::one();
        for (j, (xj, _)) in samples.iter().enumerate() {
            if i != j {
                li *= (at - xj) / (xi - xj);
            }
        }
        total += li * yi;
    }
    total
}
