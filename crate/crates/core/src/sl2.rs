//! The Heisenberg pair and the sl2 generators in both representations,
//! with machine verification of the defining relations and the
//! annihilator property.
//!
//! Generators (label n a non-negative integer):
//!     J+ = b^2 a - n b,   J0 = b a - n/2,   J- = a
//! and the derived relations checked here are
//!     [a, b] = 1,  [J0, J+] = J+,  [J0, J-] = -J-,  [J+, J-] = -2 J0.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactpoly::{rat_int, Poly, Rat};
use crate::opalg::{realize, OpExpr, Operator, ShiftOp};

pub use crate::opalg::HeisenbergRep;

/// The three sl2 generators realized in one representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Triple {
    pub jplus: Operator,
    pub jzero: Operator,
    pub jminus: Operator,
    pub n: u32,
    pub rep: HeisenbergRep,
}

/// J+ = b^2 a - n b as an abstract word.
pub fn jplus_word(n: u32) -> OpExpr {
    OpExpr::b() * OpExpr::b() * OpExpr::a()
        - OpExpr::smul(rat_int(n as i64), OpExpr::b())
}

/// J0 = b a - n/2 as an abstract word.
pub fn jzero_word(n: u32) -> OpExpr {
    OpExpr::b() * OpExpr::a() + OpExpr::scalar(-rat_int(n as i64) / rat_int(2))
}

/// J- = a as an abstract word.
pub fn jminus_word() -> OpExpr {
    OpExpr::a()
}

/// The realized Heisenberg pair (a, b) with [a, b] = 1.
pub fn heisenberg_pair(rep: &HeisenbergRep) -> (Operator, Operator) {
    rep.pair()
}

/// Realizes the n-labeled sl2 generators in the given representation.
pub fn sl2_generators(n: u32, rep: &HeisenbergRep) -> Sl2Triple {
    Sl2Triple {
        jplus: realize(&jplus_word(n), rep),
        jzero: realize(&jzero_word(n), rep),
        jminus: realize(&jminus_word(), rep),
        n,
        rep: rep.clone(),
    }
}

/// Builds the finite-difference sl2 triple directly from its closed forms:
///     J+ = x(x/d - 1) E^{-1} (1 - E^{-1})
///     J0 = (x/d)(1 - E^{-1})
///     J- = (1/d)(E - 1)
/// This is the n = 0 case of the general construction; the structural
/// equality with `sl2_generators(0, Difference)` is part of the test suite.
pub fn explicit_difference_generators(delta: &Rat) -> Sl2Triple {
    assert!(!delta.is_zero(), "delta must be nonzero");
    let inv = Rat::one() / delta;

    // x(x/d - 1) = x^2/d - x
    let quad = Poly::from_coeffs(
        alloc::vec![Rat::zero(), -Rat::one(), inv.clone()],
        crate::exactpoly::Basis::Monomial,
    );
    let mut jplus = ShiftOp::term(delta.clone(), -1, quad.clone());
    jplus = jplus.sub(&ShiftOp::term(delta.clone(), -2, quad)).unwrap();

    let xd = Poly::x().scalar_mul(&inv);
    let mut jzero = ShiftOp::term(delta.clone(), 0, xd.clone());
    jzero = jzero.sub(&ShiftOp::term(delta.clone(), -1, xd)).unwrap();

    let jminus = ShiftOp::d_plus(delta.clone());

    Sl2Triple {
        jplus: Operator::Shift(jplus),
        jzero: Operator::Shift(jzero),
        jminus: Operator::Shift(jminus),
        n: 0,
        rep: HeisenbergRep::difference(delta.clone()),
    }
}

/// True iff X and Y act identically on all monomials of degree <= dmax.
pub fn agree_on_monomials(x: &Operator, y: &Operator, dmax: usize) -> bool {
    // equal normal forms agree everywhere; the sweep is only needed to
    // separate operators that differ structurally
    if x == y {
        return true;
    }
    (0..=dmax).all(|k| {
        let p = Poly::x_pow(k);
        x.apply(&p) == y.apply(&p)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub n: u32,
    pub rep: HeisenbergRep,
    pub dmax: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks, exactly on all monomials of degree <= dmax:
/// [a,b] = 1, [J0,J+] = J+, [J0,J-] = -J-, [J+,J-] = -2 J0.
/// Failures are data, not errors.
pub fn verify_relations(n: u32, rep: &HeisenbergRep, dmax: usize) -> RelationReport {
    let (a, b) = heisenberg_pair(rep);
    let t = sl2_generators(n, rep);
    let id = rep.identity_op();

    let mut checks = Vec::new();
    let comm = |x: &Operator, y: &Operator| x.commutator(y).expect("same kind");

    checks.push(RelationCheck {
        name: "heisenberg",
        pass: agree_on_monomials(&comm(&a, &b), &id, dmax),
    });
    checks.push(RelationCheck {
        name: "j0_jplus",
        pass: agree_on_monomials(&comm(&t.jzero, &t.jplus), &t.jplus, dmax),
    });
    checks.push(RelationCheck {
        name: "j0_jminus",
        pass: agree_on_monomials(
            &comm(&t.jzero, &t.jminus),
            &t.jminus.scalar_mul(&-Rat::one()),
            dmax,
        ),
    });
    checks.push(RelationCheck {
        name: "jplus_jminus",
        pass: agree_on_monomials(
            &comm(&t.jplus, &t.jminus),
            &t.jzero.scalar_mul(&-rat_int(2)),
            dmax,
        ),
    });

    RelationReport { n, rep: rep.clone(), dmax, checks }
}

/// B(b) a^{n+1} as an abstract word, B given by its coefficients in b.
pub fn annihilator_word(b_coeffs: &[Rat], n: u32) -> OpExpr {
    let mut terms = Vec::new();
    for (i, c) in b_coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let b_pow = OpExpr::b().pow(i as u32);
        terms.push(OpExpr::smul(c.clone(), b_pow * OpExpr::a().pow(n + 1)));
    }
    if terms.is_empty() {
        OpExpr::scalar(Rat::zero())
    } else {
        OpExpr::Sum(terms)
    }
}

/// True iff B(b) a^{n+1} maps every polynomial of degree <= n to zero,
/// checked exactly on the monomials of degree <= n.
pub fn annihilator_check(b_coeffs: &[Rat], n: u32, rep: &HeisenbergRep) -> bool {
    let op = realize(&annihilator_word(b_coeffs, n), rep);
    (0..=n as usize).all(|k| op.apply(&Poly::x_pow(k)).is_zero())
}
