//! Seeded samplers for dominant weights.
//!
//! Entries are drawn from a small grid so that the equalities appearing in
//! U2–U6 are hit often: each even block and the odd block start at a random
//! point and descend in steps that are mostly 0 or 1.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{frac, Rational};
use crate::superweights::{is_dominant, Signature, Weight};

/// A deterministic stream of weights.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    /// Block starting points are drawn from [−range, range].
    range: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            range: 4,
        }
    }

    pub fn with_range(seed: u64, range: i64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            range: range.max(1),
        }
    }

    /// (p, q, n) uniformly from {1, …, max}³.
    pub fn signature(&mut self, max: usize) -> Signature {
        let mut pick = || self.rng.gen_range(1..=max);
        let (p, q, n) = (pick(), pick(), pick());
        Signature::new(p, q, n).expect("all parts are positive")
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.rng.gen_range(0..items.len())]
    }

    fn start(&mut self, den: i64) -> Rational {
        let r = self.range * den;
        frac(self.rng.gen_range(-r..=r), den)
    }

    fn descend(&mut self, first: Rational, len: usize) -> Vec<Rational> {
        let mut out = Vec::with_capacity(len);
        let mut cur = first;
        for k in 0..len {
            if k > 0 {
                let step = match self.rng.gen_range(0..10) {
                    0..=4 => 0,
                    5..=7 => 1,
                    _ => self.rng.gen_range(2..=3),
                };
                cur -= Rational::from_integer(step.into());
            }
            out.push(cur.clone());
        }
        out
    }

    fn weight_with(&mut self, sig: Signature, den: i64) -> Weight {
        let (p, q, n) = (sig.p(), sig.q(), sig.n());
        let a = self.start(den);
        let mut lambda = self.descend(a, p);
        let b = self.start(den);
        lambda.extend(self.descend(b, q));
        let c = self.start(den);
        let omega = self.descend(c, n);
        let w = Weight::new(sig, lambda, omega).expect("shape matches signature");
        debug_assert!(is_dominant(&w));
        w
    }

    /// A dominant weight with entries in ½ℤ or ⅓ℤ or ℤ.
    pub fn dominant(&mut self, sig: Signature) -> Weight {
        let den = *self.pick(&[1, 2, 2, 3]);
        self.weight_with(sig, den)
    }

    /// A dominant weight with integer entries.
    pub fn integral(&mut self, sig: Signature) -> Weight {
        self.weight_with(sig, 1)
    }
}
