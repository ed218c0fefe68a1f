//! Seeded random algebras.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Rejection-sampling budget for the perfect variants.
pub const MAX_ATTEMPTS: usize = 1000;

/// Parameters of a random algebra stream. The field is supplied separately
/// as the sampler's context.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomSpec {
    pub dims: RangeInclusive<usize>,
    /// Probability that an entry of a square is nonzero.
    pub density: f64,
    /// Integer coefficients, mapped into the field; those that vanish there
    /// are never drawn.
    pub pool: Vec<i64>,
    pub seed: u64,
}

impl RandomSpec {
    pub fn new(dims: RangeInclusive<usize>, seed: u64) -> Self {
        RandomSpec {
            dims,
            density: 0.5,
            pool: vec![-2, -1, 1, 2],
            seed,
        }
    }

    pub fn with_density(mut self, density: f64) -> Self {
        self.density = density;
        self
    }

    pub fn with_pool(mut self, pool: Vec<i64>) -> Self {
        self.pool = pool;
        self
    }
}

/// A reproducible stream of algebras: identical spec and field give an
/// identical sequence.
pub struct AlgebraSampler<F: Field> {
    field: F,
    spec: RandomSpec,
    pool: Vec<F::Elem>,
    rng: ChaCha8Rng,
}

impl<F: Field> AlgebraSampler<F> {
    pub fn new(field: F, spec: RandomSpec) -> Self {
        let mut pool: Vec<F::Elem> = Vec::new();
        for &v in &spec.pool {
            let x = field.from_i64(v);
            if !field.is_zero(&x) && !pool.contains(&x) {
                pool.push(x);
            }
        }
        let rng = ChaCha8Rng::seed_from_u64(spec.seed);
        AlgebraSampler { field, spec, pool, rng }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn dim(&mut self) -> usize {
        self.rng.gen_range(self.spec.dims.clone())
    }

    fn nonzero(&mut self) -> Option<F::Elem> {
        self.pool.choose(&mut self.rng).cloned()
    }

    fn entry(&mut self) -> F::Elem {
        let density = self.spec.density.clamp(0.0, 1.0);
        if self.rng.gen_bool(density) {
            if let Some(x) = self.nonzero() {
                return x;
            }
        }
        self.field.zero()
    }

    /// Squares whose entry `(i, j)` is drawn when `allowed(i, j)` and zero
    /// otherwise; entries with `forced(i, j)` are drawn nonzero.
    fn squares(
        &mut self,
        n: usize,
        allowed: impl Fn(usize, usize) -> bool,
        forced: impl Fn(usize, usize) -> bool,
    ) -> Vec<Vec<F::Elem>> {
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let x = if forced(i, j) {
                    self.nonzero().unwrap_or_else(|| self.field.zero())
                } else if allowed(i, j) {
                    self.entry()
                } else {
                    self.field.zero()
                };
                row.push(x);
            }
            out.push(row);
        }
        out
    }

    fn build(&self, squares: Vec<Vec<F::Elem>>) -> EvolutionAlgebra<F> {
        EvolutionAlgebra::new(self.field.clone(), squares).expect("sampled dimensions lie in 1..=64")
    }

    pub fn next_algebra(&mut self) -> EvolutionAlgebra<F> {
        let n = self.dim();
        let sq = self.squares(n, |_, _| true, |_, _| false);
        self.build(sq)
    }

    /// Rejection-samples until the structure matrix is invertible.
    pub fn next_perfect(&mut self) -> Result<EvolutionAlgebra<F>> {
        self.retry(|s| s.next_algebra())
    }

    /// A perfect algebra whose graph contains a Hamiltonian cycle, hence is
    /// strongly connected.
    pub fn next_strongly_connected_perfect(&mut self) -> Result<EvolutionAlgebra<F>> {
        self.retry(|s| {
            let n = s.dim();
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut s.rng);
            let mut next = vec![0; n];
            for k in 0..n {
                next[order[k]] = order[(k + 1) % n];
            }
            let sq = s.squares(n, |_, _| true, |i, j| next[i] == j);
            s.build(sq)
        })
    }

    /// A perfect algebra of dimension at least 2 with a proper nonempty set
    /// of vertices that no edge leaves, so its graph is not simple.
    pub fn next_with_sink_component_perfect(&mut self) -> Result<EvolutionAlgebra<F>> {
        if *self.spec.dims.end() < 2 {
            return Err(Error::Precondition(
                "a sink component needs dimension at least 2".into(),
            ));
        }
        self.retry(|s| {
            let n = s.rng.gen_range((*s.spec.dims.start()).max(2)..=*s.spec.dims.end());
            let k = s.rng.gen_range(1..n);
            let mut vertices: Vec<usize> = (0..n).collect();
            vertices.shuffle(&mut s.rng);
            let mut inside = vec![false; n];
            for &v in &vertices[..k] {
                inside[v] = true;
            }
            let sq = s.squares(n, |i, j| !inside[i] || inside[j], |_, _| false);
            s.build(sq)
        })
    }

    fn retry(&mut self, mut draw: impl FnMut(&mut Self) -> EvolutionAlgebra<F>) -> Result<EvolutionAlgebra<F>> {
        for _ in 0..MAX_ATTEMPTS {
            let a = draw(self);
            if a.is_perfect() {
                return Ok(a);
            }
        }
        Err(Error::SamplingExhausted { attempts: MAX_ATTEMPTS })
    }
}

pub fn random_algebra<F: Field>(field: F, spec: &RandomSpec) -> EvolutionAlgebra<F> {
    AlgebraSampler::new(field, spec.clone()).next_algebra()
}

pub fn random_perfect_algebra<F: Field>(field: F, spec: &RandomSpec) -> Result<EvolutionAlgebra<F>> {
    AlgebraSampler::new(field, spec.clone()).next_perfect()
}
