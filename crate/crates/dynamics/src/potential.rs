//! Pairwise potentials and external fields with analytic derivatives.

/// Radial pair potential `phi(r)` with its first two derivatives, defined
/// for separations `r > 0`.
pub trait PairPotential: Send + Sync {
    fn phi(&self, r: f64) -> f64;
    fn dphi(&self, r: f64) -> f64;
    fn d2phi(&self, r: f64) -> f64;
}

/// Gravitational attraction of one particle pair,
/// `phi(r) = -coeff / r` with `coeff = G * m_i * m_j`.
#[derive(Clone, Copy, Debug)]
pub struct Gravity {
    coeff: f64,
}

impl Gravity {
    pub fn new(coeff: f64) -> Self {
        Self { coeff }
    }

    pub fn coeff(&self) -> f64 {
        self.coeff
    }
}

impl PairPotential for Gravity {
    fn phi(&self, r: f64) -> f64 {
        -self.coeff / r
    }

    fn dphi(&self, r: f64) -> f64 {
        self.coeff / (r * r)
    }

    fn d2phi(&self, r: f64) -> f64 {
        -2.0 * self.coeff / (r * r * r)
    }
}

/// Harmonic spring `phi(r) = k (r - r0)^2 / 2`.
#[derive(Clone, Copy, Debug)]
pub struct Spring {
    pub stiffness: f64,
    pub rest_length: f64,
}

impl PairPotential for Spring {
    fn phi(&self, r: f64) -> f64 {
        0.5 * self.stiffness * (r - self.rest_length) * (r - self.rest_length)
    }

    fn dphi(&self, r: f64) -> f64 {
        self.stiffness * (r - self.rest_length)
    }

    fn d2phi(&self, _r: f64) -> f64 {
        self.stiffness
    }
}

/// Time-independent external field `u(r)` with gradient and Hessian.
pub trait ExternalField<const D: usize>: Send + Sync {
    fn u(&self, r: &[f64; D]) -> f64;
    fn grad(&self, r: &[f64; D]) -> [f64; D];
    fn hessian(&self, r: &[f64; D]) -> [[f64; D]; D];
}

/// Isotropic harmonic well `u(r) = k |r|^2 / 2`.
#[derive(Clone, Copy, Debug)]
pub struct HarmonicField {
    pub stiffness: f64,
}

impl<const D: usize> ExternalField<D> for HarmonicField {
    fn u(&self, r: &[f64; D]) -> f64 {
        0.5 * self.stiffness * crate::vec::dot(*r, *r)
    }

    fn grad(&self, r: &[f64; D]) -> [f64; D] {
        crate::vec::scale(self.stiffness, *r)
    }

    fn hessian(&self, _r: &[f64; D]) -> [[f64; D]; D] {
        let mut h = [[0.0; D]; D];
        for (k, row) in h.iter_mut().enumerate() {
            row[k] = self.stiffness;
        }
        h
    }
}
