use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactpoly::{Poly, Rat};

/// Differential operator in normal form: sum over j of q_j(x) * d^j/dx^j.
/// `coeffs[j]` is q_j; the highest-order coefficient is nonzero unless the
/// operator is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    coeffs: Vec<Poly>,
}

impl DiffOp {
    pub fn zero() -> DiffOp {
        DiffOp { coeffs: Vec::new() }
    }

    pub fn identity() -> DiffOp {
        DiffOp::scalar(Rat::one())
    }

    pub fn scalar(c: Rat) -> DiffOp {
        DiffOp::from_coeffs(alloc::vec![Poly::constant(c)])
    }

    /// d/dx.
    pub fn d_dx() -> DiffOp {
        DiffOp::from_coeffs(alloc::vec![Poly::zero(), Poly::constant(Rat::one())])
    }

    /// Multiplication by x.
    pub fn mul_by_x() -> DiffOp {
        DiffOp::from_coeffs(alloc::vec![Poly::x()])
    }

    /// q(x) * d^j/dx^j as a single-term operator.
    pub fn term(j: usize, coeff: Poly) -> DiffOp {
        let mut coeffs = alloc::vec![Poly::zero(); j + 1];
        coeffs[j] = coeff;
        DiffOp::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<Poly>) -> DiffOp {
        for c in &coeffs {
            assert!(
                c.basis().is_monomial() || c.is_zero(),
                "differential coefficients are monomial polynomials"
            );
        }
        let mut op = DiffOp { coeffs };
        op.trim();
        op
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Poly {
        self.coeffs.get(j).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// sum q_j(x) * p^(j)(x), exact.
    pub fn apply(&self, p: &Poly) -> Poly {
        assert!(p.basis().is_monomial(), "differential operators act on monomial-basis polynomials");
        let mut out = Poly::zero();
        let mut deriv = p.clone();
        for (j, q) in self.coeffs.iter().enumerate() {
            if j > 0 {
                deriv = deriv.derivative().expect("monomial derivative");
            }
            out = out.add(&q.mul(&deriv).expect("monomial product"));
        }
        out
    }

    /// Leibniz normal form of self * other:
    /// (q d^j)(p d^k) = q * sum_i C(j,i) p^(i) d^{j-i+k}.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (j, q) in self.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (k, p) in other.coeffs.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let mut binom = BigInt::one();
                let mut deriv = p.clone();
                for i in 0..=j {
                    if i > 0 {
                        deriv = deriv.derivative().expect("monomial derivative");
                        // C(j, i) = C(j, i-1) * (j - i + 1) / i
                        binom = binom * BigInt::from(j - i + 1) / BigInt::from(i);
                    }
                    if deriv.is_zero() {
                        break;
                    }
                    let c = Rat::from_integer(binom.clone());
                    let contrib = q
                        .mul(&deriv.scalar_mul(&c))
                        .expect("monomial product");
                    out = out.add(&DiffOp::term(j - i + k, contrib));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|j| self.coeff(j).add(&other.coeff(j))).collect();
        DiffOp::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> DiffOp {
        DiffOp { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, other: &DiffOp) -> DiffOp {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Rat) -> DiffOp {
        if c.is_zero() {
            return DiffOp::zero();
        }
        DiffOp { coeffs: self.coeffs.iter().map(|p| p.scalar_mul(c)).collect() }
    }

    /// self*other - other*self.
    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.compose(other).sub(&other.compose(self))
    }
}
