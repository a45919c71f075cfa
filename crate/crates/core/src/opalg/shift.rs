use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::exactpoly::{rat_int, Poly, Rat};
use crate::{Error, Result};

/// Finite-difference operator in normal form: sum over s of p_s(x) * E^s,
/// where (E^s f)(x) = f(x + s*delta). Coefficient polynomials are monomial
/// basis; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftOp {
    delta: Rat,
    terms: BTreeMap<i64, Poly>,
}

impl ShiftOp {
    pub fn zero(delta: Rat) -> ShiftOp {
        assert!(!delta.is_zero(), "shift step must be nonzero");
        ShiftOp { delta, terms: BTreeMap::new() }
    }

    pub fn identity(delta: Rat) -> ShiftOp {
        ShiftOp::scalar(delta, Rat::one())
    }

    pub fn scalar(delta: Rat, c: Rat) -> ShiftOp {
        let mut op = ShiftOp::zero(delta);
        op.add_term(0, Poly::constant(c));
        op
    }

    /// p(x) * E^s as a single-term operator.
    pub fn term(delta: Rat, s: i64, coeff: Poly) -> ShiftOp {
        let mut op = ShiftOp::zero(delta);
        op.add_term(s, coeff);
        op
    }

    /// Accumulates `coeff * E^s` into the normal form.
    pub fn add_term(&mut self, s: i64, coeff: Poly) {
        assert!(coeff.basis().is_monomial(), "shift coefficients are monomial polynomials");
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&s) {
            None => {
                self.terms.insert(s, coeff);
            }
            Some(existing) => {
                let sum = existing.add(&coeff);
                if !sum.is_zero() {
                    self.terms.insert(s, sum);
                }
            }
        }
    }

    /// Forward difference D+ = (E - 1)/delta.
    pub fn d_plus(delta: Rat) -> ShiftOp {
        let inv = Rat::one() / &delta;
        let mut op = ShiftOp::zero(delta);
        op.add_term(1, Poly::constant(inv.clone()));
        op.add_term(0, Poly::constant(-inv));
        op
    }

    /// Backward difference D- = (1 - E^{-1})/delta.
    pub fn d_minus(delta: Rat) -> ShiftOp {
        let inv = Rat::one() / &delta;
        let mut op = ShiftOp::zero(delta);
        op.add_term(0, Poly::constant(inv.clone()));
        op.add_term(-1, Poly::constant(-inv));
        op
    }

    /// The b of the finite-difference Heisenberg pair: x * E^{-1}.
    pub fn x_shift_back(delta: Rat) -> ShiftOp {
        ShiftOp::term(delta, -1, Poly::x())
    }

    pub fn delta(&self) -> &Rat {
        &self.delta
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: i64) -> Poly {
        self.terms.get(&s).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The set {s : p_s != 0}, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    /// Applies to a monomial-basis polynomial: sum p_s(x) * p(x + s*delta).
    pub fn apply(&self, p: &Poly) -> Poly {
        assert!(p.basis().is_monomial(), "shift operators act on monomial-basis polynomials");
        let mut out = Poly::zero();
        for (s, coeff) in &self.terms {
            let shifted = p.shift(&(rat_int(*s) * &self.delta)).expect("monomial shift");
            out = out.add(&coeff.mul(&shifted).expect("monomial product"));
        }
        out
    }

    /// Normal form of the composition self * other, applied right to left:
    /// (p*E^a)(q*E^b) = p(x) q(x + a*delta) E^{a+b}.
    pub fn compose(&self, other: &ShiftOp) -> Result<ShiftOp> {
        if self.delta != other.delta {
            return Err(Error::DeltaMismatch);
        }
        let mut out = ShiftOp::zero(self.delta.clone());
        for (a, p) in &self.terms {
            let step = rat_int(*a) * &self.delta;
            for (b, q) in &other.terms {
                let moved = q.shift(&step).expect("monomial shift");
                out.add_term(a + b, p.mul(&moved).expect("monomial product"));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ShiftOp) -> Result<ShiftOp> {
        if self.delta != other.delta {
            return Err(Error::DeltaMismatch);
        }
        let mut out = self.clone();
        for (s, coeff) in &other.terms {
            out.add_term(*s, coeff.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> ShiftOp {
        ShiftOp {
            delta: self.delta.clone(),
            terms: self.terms.iter().map(|(s, p)| (*s, p.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &ShiftOp) -> Result<ShiftOp> {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Rat) -> ShiftOp {
        if c.is_zero() {
            return ShiftOp::zero(self.delta.clone());
        }
        ShiftOp {
            delta: self.delta.clone(),
            terms: self.terms.iter().map(|(s, p)| (*s, p.scalar_mul(c))).collect(),
        }
    }

    /// self*other - other*self.
    pub fn commutator(&self, other: &ShiftOp) -> Result<ShiftOp> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    /// Canonical form with positive step: E^s at step -d equals E^{-s} at
    /// step d, so a negative delta flips the sign of every shift index.
    pub fn canonical(&self) -> ShiftOp {
        if !self.delta.is_negative() {
            return self.clone();
        }
        ShiftOp {
            delta: -self.delta.clone(),
            terms: self.terms.iter().map(|(s, p)| (-*s, p.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    #[test]
    fn forward_difference_of_square() {
        // D+ x^2 = 2x + 1 at delta = 1
        let d = ShiftOp::d_plus(rat_int(1));
        assert_eq!(d.apply(&Poly::x_pow(2)), Poly::from_ints(&[1, 2]));
    }

    #[test]
    fn identity_term_applies_as_identity() {
        let id = ShiftOp::identity(rat_int(1));
        let p = Poly::from_ints(&[4, 0, -3, 1]);
        assert_eq!(id.apply(&p), p);
    }

    #[test]
    fn x_shift_back_builds_falling_factorial() {
        // b x = x(x - 1) at delta = 1
        let b = ShiftOp::x_shift_back(rat_int(1));
        assert_eq!(b.apply(&Poly::x()), Poly::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn compose_two_backward_x_shifts() {
        // (x E^{-1})(x E^{-1}) = x(x-1) E^{-2} at delta = 1
        let b = ShiftOp::x_shift_back(rat_int(1));
        let bb = b.compose(&b).unwrap();
        assert_eq!(bb.support(), alloc::vec![-2]);
        assert_eq!(bb.coeff(-2), Poly::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn opposite_unit_shifts_cancel() {
        let delta = rat(1, 2);
        let e_plus = ShiftOp::term(delta.clone(), 1, Poly::constant(Rat::one()));
        let e_minus = ShiftOp::term(delta.clone(), -1, Poly::constant(Rat::one()));
        assert_eq!(e_plus.compose(&e_minus).unwrap(), ShiftOp::identity(delta));
    }

    #[test]
    fn heisenberg_commutator_is_identity() {
        for delta in [rat_int(1), rat(1, 2), rat(-2, 3)] {
            let a = ShiftOp::d_plus(delta.clone());
            let b = ShiftOp::x_shift_back(delta.clone());
            assert_eq!(a.commutator(&b).unwrap(), ShiftOp::identity(delta));
        }
    }

    #[test]
    fn self_commutator_vanishes() {
        let a = ShiftOp::d_plus(rat(5, 1));
        assert!(a.commutator(&a).unwrap().is_zero());
    }

    #[test]
    fn delta_mismatch_is_an_error() {
        let a = ShiftOp::d_plus(rat_int(1));
        let b = ShiftOp::d_plus(rat_int(2));
        assert_eq!(a.compose(&b), Err(Error::DeltaMismatch));
        assert_eq!(a.add(&b), Err(Error::DeltaMismatch));
    }

    #[test]
    fn support_of_d_plus() {
        let d = ShiftOp::d_plus(rat_int(1));
        assert_eq!(d.support(), alloc::vec![0, 1]);
        assert_eq!(ShiftOp::identity(rat_int(1)).support(), alloc::vec![0]);
    }

    #[test]
    fn delta_reflection() {
        // D+ built with step -delta equals D- built with step delta.
        for delta in [rat_int(1), rat(1, 2), rat_int(5)] {
            let reflected = ShiftOp::d_plus(-delta.clone());
            let backward = ShiftOp::d_minus(delta);
            assert_eq!(reflected.canonical(), backward.canonical());
        }
    }
}
