//! Seeded random elements for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diffalg::OpPoly;
use crate::poly::{q, Mono, Poly, Var};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    fn nonzero(&mut self) -> i64 {
        let k = self.int(1, 3);
        if self.rng.gen_bool(0.5) {
            k
        } else {
            -k
        }
    }

    /// Differential polynomial in `gens` generators with at most `terms`
    /// terms, each of degree `<= max_deg` in jets of order `<= max_order`.
    pub fn poly(&mut self, gens: usize, max_deg: u32, max_order: u16, terms: usize) -> Poly {
        let mut p = Poly::zero();
        if gens == 0 {
            return Poly::int(self.nonzero());
        }
        for _ in 0..terms {
            let deg = self.int(0, max_deg as i64) as u32;
            let f: Vec<(Var, u32)> = (0..deg)
                .map(|_| {
                    let g = self.index(gens) as u16;
                    let n = self.int(0, max_order as i64) as u16;
                    (Var::U(g, n), 1)
                })
                .collect();
            p.add_term(Mono::from_factors(f), q(self.nonzero()));
        }
        p
    }

    /// Operator of ∂-degree `<= 2` with coefficient degree `<= 2`.
    pub fn op(&mut self, gens: usize) -> OpPoly {
        let order = self.int(0, 2) as usize;
        let coeffs = (0..=order).map(|_| self.poly(gens, 2, 1, 2)).collect();
        OpPoly::new(coeffs)
    }

    /// `a(∂)g` for a random operator, where `g(n)` is the n-th jet of a
    /// module generator.
    pub fn op_times(&mut self, gens: usize, g: impl Fn(u16) -> Var) -> Poly {
        let a = self.op(gens);
        let mut out = Poly::zero();
        for (n, c) in a.coeffs().iter().enumerate() {
            out += &(c * &Poly::var(g(n as u16)));
        }
        out
    }

    pub fn bool(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }
}
