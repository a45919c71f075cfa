use alloc::boxed::Box;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactpoly::{rat_int, Poly, Rat};
use crate::opalg::{DiffOp, ShiftOp};
use crate::{Error, Result};

/// Representation of the Heisenberg pair: either (d/dx, x) or the
/// finite-difference pair (D+, x*E^{-1}) with step delta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeisenbergRep {
    Differential,
    Difference { delta: Rat },
}

impl HeisenbergRep {
    pub fn difference(delta: Rat) -> HeisenbergRep {
        assert!(!delta.is_zero(), "difference representation needs delta != 0");
        HeisenbergRep::Difference { delta }
    }

    /// The realized generator pair (a, b) with [a, b] = 1.
    pub fn pair(&self) -> (Operator, Operator) {
        match self {
            HeisenbergRep::Differential => {
                (Operator::Diff(DiffOp::d_dx()), Operator::Diff(DiffOp::mul_by_x()))
            }
            HeisenbergRep::Difference { delta } => (
                Operator::Shift(ShiftOp::d_plus(delta.clone())),
                Operator::Shift(ShiftOp::x_shift_back(delta.clone())),
            ),
        }
    }

    pub fn scalar_op(&self, c: Rat) -> Operator {
        match self {
            HeisenbergRep::Differential => Operator::Diff(DiffOp::scalar(c)),
            HeisenbergRep::Difference { delta } => {
                Operator::Shift(ShiftOp::scalar(delta.clone(), c))
            }
        }
    }

    pub fn identity_op(&self) -> Operator {
        self.scalar_op(Rat::one())
    }
}

/// Representation-independent expression in the abstract generators a, b.
/// Products keep their written order; nothing is normal-ordered here —
/// normalization happens only in `realize`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpExpr {
    GenA,
    GenB,
    Scalar(Rat),
    Sum(Vec<OpExpr>),
    Product(Vec<OpExpr>),
    ScalarMul(Rat, Box<OpExpr>),
}

impl OpExpr {
    pub fn a() -> OpExpr {
        OpExpr::GenA
    }

    pub fn b() -> OpExpr {
        OpExpr::GenB
    }

    pub fn scalar(c: Rat) -> OpExpr {
        OpExpr::Scalar(c)
    }

    pub fn num(n: i64) -> OpExpr {
        OpExpr::Scalar(rat_int(n))
    }

    pub fn smul(c: Rat, e: OpExpr) -> OpExpr {
        OpExpr::ScalarMul(c, Box::new(e))
    }

    pub fn pow(self, k: u32) -> OpExpr {
        if k == 0 {
            return OpExpr::Scalar(Rat::one());
        }
        OpExpr::Product(core::iter::repeat(self).take(k as usize).collect())
    }

    /// Word length: number of generator/scalar leaves.
    pub fn len(&self) -> usize {
        match self {
            OpExpr::GenA | OpExpr::GenB | OpExpr::Scalar(_) => 1,
            OpExpr::Sum(es) | OpExpr::Product(es) => es.iter().map(OpExpr::len).sum(),
            OpExpr::ScalarMul(_, e) => e.len(),
        }
    }
}

impl core::ops::Add for OpExpr {
    type Output = OpExpr;
    fn add(self, rhs: OpExpr) -> OpExpr {
        match (self, rhs) {
            (OpExpr::Sum(mut l), OpExpr::Sum(r)) => {
                l.extend(r);
                OpExpr::Sum(l)
            }
            (OpExpr::Sum(mut l), r) => {
                l.push(r);
                OpExpr::Sum(l)
            }
            (l, r) => OpExpr::Sum(alloc::vec![l, r]),
        }
    }
}

impl core::ops::Sub for OpExpr {
    type Output = OpExpr;
    fn sub(self, rhs: OpExpr) -> OpExpr {
        self + OpExpr::smul(-Rat::one(), rhs)
    }
}

impl core::ops::Mul for OpExpr {
    type Output = OpExpr;
    fn mul(self, rhs: OpExpr) -> OpExpr {
        match (self, rhs) {
            (OpExpr::Product(mut l), OpExpr::Product(r)) => {
                l.extend(r);
                OpExpr::Product(l)
            }
            (OpExpr::Product(mut l), r) => {
                l.push(r);
                OpExpr::Product(l)
            }
            (l, r) => OpExpr::Product(alloc::vec![l, r]),
        }
    }
}

/// A realized operator: one of the two normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Operator {
    Diff(DiffOp),
    Shift(ShiftOp),
}

impl Operator {
    pub fn apply(&self, p: &Poly) -> Poly {
        match self {
            Operator::Diff(d) => d.apply(p),
            Operator::Shift(s) => s.apply(p),
        }
    }

    pub fn compose(&self, other: &Operator) -> Result<Operator> {
        match (self, other) {
            (Operator::Diff(a), Operator::Diff(b)) => Ok(Operator::Diff(a.compose(b))),
            (Operator::Shift(a), Operator::Shift(b)) => Ok(Operator::Shift(a.compose(b)?)),
            _ => Err(Error::KindMismatch),
        }
    }

    pub fn add(&self, other: &Operator) -> Result<Operator> {
        match (self, other) {
            (Operator::Diff(a), Operator::Diff(b)) => Ok(Operator::Diff(a.add(b))),
            (Operator::Shift(a), Operator::Shift(b)) => Ok(Operator::Shift(a.add(b)?)),
            _ => Err(Error::KindMismatch),
        }
    }

    pub fn sub(&self, other: &Operator) -> Result<Operator> {
        self.add(&other.scalar_mul(&-Rat::one()))
    }

    pub fn scalar_mul(&self, c: &Rat) -> Operator {
        match self {
            Operator::Diff(d) => Operator::Diff(d.scalar_mul(c)),
            Operator::Shift(s) => Operator::Shift(s.scalar_mul(c)),
        }
    }

    pub fn commutator(&self, other: &Operator) -> Result<Operator> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Operator::Diff(d) => d.is_zero(),
            Operator::Shift(s) => s.is_zero(),
        }
    }

    pub fn as_shift(&self) -> Option<&ShiftOp> {
        match self {
            Operator::Shift(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_diff(&self) -> Option<&DiffOp> {
        match self {
            Operator::Diff(d) => Some(d),
            _ => None,
        }
    }
}

/// Substitutes a, b by their realization and returns the normal form.
/// A homomorphism: realize(X*Y) = realize(X) composed with realize(Y).
pub fn realize(expr: &OpExpr, rep: &HeisenbergRep) -> Operator {
    let (a, b) = rep.pair();
    realize_with(expr, rep, &a, &b)
}

fn realize_with(expr: &OpExpr, rep: &HeisenbergRep, a: &Operator, b: &Operator) -> Operator {
    match expr {
        OpExpr::GenA => a.clone(),
        OpExpr::GenB => b.clone(),
        OpExpr::Scalar(c) => rep.scalar_op(c.clone()),
        OpExpr::ScalarMul(c, e) => realize_with(e, rep, a, b).scalar_mul(c),
        OpExpr::Sum(es) => {
            let mut acc = rep.scalar_op(Rat::zero());
            for e in es {
                acc = acc
                    .add(&realize_with(e, rep, a, b))
                    .expect("uniform kind within one realization");
            }
            acc
        }
        OpExpr::Product(es) => {
            let mut acc = rep.identity_op();
            for e in es {
                acc = acc
                    .compose(&realize_with(e, rep, a, b))
                    .expect("uniform kind within one realization");
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    #[test]
    fn gen_b_differential_is_multiplication_by_x() {
        let op = realize(&OpExpr::b(), &HeisenbergRep::Differential);
        assert_eq!(op, Operator::Diff(DiffOp::mul_by_x()));
    }

    #[test]
    fn heisenberg_relation_in_both_reps() {
        let word = OpExpr::a() * OpExpr::b() - OpExpr::b() * OpExpr::a();
        for rep in [
            HeisenbergRep::Differential,
            HeisenbergRep::difference(rat_int(1)),
            HeisenbergRep::difference(rat(-2, 3)),
        ] {
            assert_eq!(realize(&word, &rep), rep.identity_op());
        }
    }

    #[test]
    fn b_squared_on_vacuum_is_falling_factorial() {
        let rep = HeisenbergRep::difference(rat_int(1));
        let bb = realize(&(OpExpr::b() * OpExpr::b()), &rep);
        assert_eq!(bb.apply(&Poly::constant(Rat::one())), Poly::from_ints(&[0, -1, 1]));
    }

    #[test]
    fn realize_is_a_homomorphism_on_a_word() {
        let x = OpExpr::b() * OpExpr::a() + OpExpr::num(3);
        let y = OpExpr::a() * OpExpr::a() - OpExpr::b();
        let rep = HeisenbergRep::difference(rat(1, 2));
        let lhs = realize(&(x.clone() * y.clone()), &rep);
        let rhs = realize(&x, &rep).compose(&realize(&y, &rep)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn kind_mismatch_detected() {
        let d = Operator::Diff(DiffOp::d_dx());
        let s = Operator::Shift(ShiftOp::d_plus(rat_int(1)));
        assert_eq!(d.compose(&s), Err(Error::KindMismatch));
        assert_eq!(d.add(&s), Err(Error::KindMismatch));
    }
}
