//! Seeded random forms and group elements for property checks.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::forms::{BinaryForm, GroupElement};
use crate::invariants::quintic_invariants;
use crate::rational::{rat, Rational};

pub use rand::SeedableRng;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_form(rng: &mut SampleRng, order: usize, bound: i64) -> BinaryForm {
    loop {
        let c: Vec<i64> = (0..=order).map(|_| rng.gen_range(-bound..=bound)).collect();
        if c.iter().any(|&x| x != 0) {
            return BinaryForm::from_ints(&c);
        }
    }
}

/// A random integer quintic with nonzero discriminant.
pub fn stable_quintic(rng: &mut SampleRng, bound: i64) -> BinaryForm {
    loop {
        let f = int_form(rng, 5, bound);
        let iv = quintic_invariants(&f).expect("order 5");
        if !iv.disc.is_zero() {
            return f;
        }
    }
}

/// A random integer matrix of determinant 1, as a product of elementary shears.
pub fn sl2_element(rng: &mut SampleRng, bound: i64) -> GroupElement {
    let mut g = GroupElement::identity();
    for step in 0..3 {
        let t = rng.gen_range(-bound..=bound);
        let e = if step % 2 == 0 {
            GroupElement::from_ints([[1, t], [0, 1]])
        } else {
            GroupElement::from_ints([[1, 0], [t, 1]])
        };
        g = g.compose(&e.expect("unipotent"));
    }
    g
}

pub fn nonzero_rational(rng: &mut SampleRng, bound: i64) -> Rational {
    loop {
        let n = rng.gen_range(-bound..=bound);
        let d = rng.gen_range(1..=bound);
        if n != 0 {
            return &rat(n) / &rat(d);
        }
    }
}
