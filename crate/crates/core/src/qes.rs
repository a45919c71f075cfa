//! The quasi-exactly-solvable cubic element
//!     A+ (J+ + delta J0 J0) + A1 J0 J0 (J- + 1/delta)
//!         + A2 J0 J- + A3 J0 + A4 J- + A5
//! in the n-labeled generators: three-point support, the (n+1)-dimensional
//! invariant subspace, its exact block matrix and characteristic
//! polynomial, and cross-representation isospectrality.

use num_traits::{One, Zero};

use crate::exactpoly::{Basis, Poly, Rat};
use crate::opalg::{realize, HeisenbergRep, MatrixQ, OpExpr, Operator};
use crate::sl2::{jminus_word, jplus_word, jzero_word};
use crate::solvable::SolvableParams;
use crate::{Error, Result};

/// Coefficients of the QES cubic element, the step delta, and the
/// representation label n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QesParams {
    pub aplus: Rat,
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub a5: Rat,
    pub delta: Rat,
    pub n: u32,
}

impl QesParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        aplus: Rat,
        a1: Rat,
        a2: Rat,
        a3: Rat,
        a4: Rat,
        a5: Rat,
        delta: Rat,
        n: u32,
    ) -> QesParams {
        assert!(!delta.is_zero(), "delta must be nonzero");
        QesParams { aplus, a1, a2, a3, a4, a5, delta, n }
    }

    /// At A+ = 0 and n = 0 the element reduces to the exactly-solvable one.
    pub fn solvable_part(&self) -> SolvableParams {
        SolvableParams::new(
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a5.clone(),
            self.delta.clone(),
        )
    }

    /// The abstract QES word in the n-labeled generators.
    pub fn word(&self) -> OpExpr {
        let jp = || jplus_word(self.n);
        let j0 = || jzero_word(self.n);
        let jm = || jminus_word();
        let inv = Rat::one() / &self.delta;

        OpExpr::smul(self.aplus.clone(), jp() + OpExpr::smul(self.delta.clone(), j0() * j0()))
            + OpExpr::smul(self.a1.clone(), j0() * j0() * (jm() + OpExpr::scalar(inv)))
            + OpExpr::smul(self.a2.clone(), j0() * jm())
            + OpExpr::smul(self.a3.clone(), j0())
            + OpExpr::smul(self.a4.clone(), jm())
            + OpExpr::scalar(self.a5.clone())
    }

    pub fn difference_rep(&self) -> HeisenbergRep {
        HeisenbergRep::difference(self.delta.clone())
    }

    /// The natural polynomial basis of a representation: monomials for the
    /// differential one, delta-falling-factorials for the difference one.
    pub fn natural_basis(&self, rep: &HeisenbergRep) -> Basis {
        match rep {
            HeisenbergRep::Differential => Basis::Monomial,
            HeisenbergRep::Difference { delta } => Basis::falling(delta.clone()),
        }
    }
}

/// Realizes the QES word in the given representation.
pub fn build_qes(qp: &QesParams, rep: &HeisenbergRep) -> Operator {
    if let HeisenbergRep::Difference { delta } = rep {
        debug_assert_eq!(delta, &qp.delta, "rep step must match the parameter step");
    }
    realize(&qp.word(), rep)
}

/// True iff the realized difference operator relates only the three points
/// x - delta, x, x + delta: the E^{-2} contributions of b^2 a and
/// delta (J0)^2 cancel in the normal form.
pub fn three_point_check(qp: &QesParams) -> bool {
    let op = build_qes(qp, &qp.difference_rep());
    op.as_shift()
        .map(|s| s.support().iter().all(|&sh| (-1..=1).contains(&sh)))
        .unwrap_or(false)
}

/// The exact (n+1) x (n+1) matrix of the QES operator on the degree-<= n
/// subspace in the representation's natural basis. Any image escaping
/// degree n signals a bug and is an error, never silently projected.
pub fn invariant_block(qp: &QesParams, rep: &HeisenbergRep) -> Result<MatrixQ> {
    let op = build_qes(qp, rep);
    let basis = qp.natural_basis(rep);
    let dim = qp.n as usize + 1;
    let mut m = MatrixQ::zero(dim);
    for j in 0..dim {
        let e_j = match &basis {
            Basis::Monomial => Poly::x_pow(j),
            Basis::Falling { delta } => crate::exactpoly::falling_factorial(j, delta),
        };
        let expressed = op.apply(&e_j).change_basis(&basis);
        if expressed.coeffs().len() > dim {
            return Err(Error::InvarianceViolation { column: j });
        }
        for (i, c) in expressed.coeffs().iter().enumerate() {
            m.set(i, j, c.clone());
        }
    }
    Ok(m)
}

/// The exact characteristic polynomial of the invariant block, identical
/// across representations; certified by coefficientwise equality, never by
/// comparing floating-point roots.
pub fn qes_char_poly(qp: &QesParams, rep: &HeisenbergRep) -> Result<Poly> {
    Ok(invariant_block(qp, rep)?.char_poly())
}

/// True iff the characteristic polynomials of the two representations'
/// invariant blocks agree exactly.
pub fn qes_isospectral_check(qp: &QesParams) -> Result<bool> {
    let diff = qes_char_poly(qp, &HeisenbergRep::Differential)?;
    let shift = qes_char_poly(qp, &qp.difference_rep())?;
    Ok(diff == shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{rat, rat_int};
    use crate::solvable::{build_operator, eigenvalue};

    fn pinned() -> QesParams {
        // A+ = 1, A3 = 1, rest 0, delta = 1, n = 1
        QesParams::new(
            rat_int(1),
            rat_int(0),
            rat_int(0),
            rat_int(1),
            rat_int(0),
            rat_int(0),
            rat_int(1),
            1,
        )
    }

    fn charlier_qes(mu: i64, n: u32) -> QesParams {
        QesParams::new(
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(-1),
            rat_int(mu),
            rat_int(0),
            rat_int(1),
            n,
        )
    }

    #[test]
    fn reduces_to_solvable_at_aplus_zero_n_zero() {
        let qp = QesParams::new(
            rat_int(0),
            rat(2, 3),
            rat(-1, 2),
            rat_int(4),
            rat(5, 7),
            rat(-3, 2),
            rat(1, 2),
            0,
        );
        for rep in [HeisenbergRep::Differential, qp.difference_rep()] {
            assert_eq!(build_qes(&qp, &rep), build_operator(&qp.solvable_part(), &rep));
        }
    }

    #[test]
    fn pinned_differential_block() {
        let m = invariant_block(&pinned(), &HeisenbergRep::Differential).unwrap();
        assert_eq!(m.get(0, 0), &rat(-1, 4));
        assert_eq!(m.get(0, 1), &rat_int(0));
        assert_eq!(m.get(1, 0), &rat_int(-1));
        assert_eq!(m.get(1, 1), &rat(3, 4));
    }

    #[test]
    fn pinned_char_poly() {
        let cp = qes_char_poly(&pinned(), &HeisenbergRep::Differential).unwrap();
        assert_eq!(cp.coeffs(), &[rat(-3, 16), rat(-1, 2), rat_int(1)]);
        assert!(qes_isospectral_check(&pinned()).unwrap());
    }

    #[test]
    fn pinned_difference_support() {
        let qp = pinned();
        assert!(three_point_check(&qp));
    }

    #[test]
    fn j0_squared_alone_needs_two_shifts() {
        // negative control: delta (J0)^2 without J+ reaches E^{-2}
        let qp = pinned();
        let word = OpExpr::smul(
            qp.delta.clone(),
            crate::sl2::jzero_word(qp.n) * crate::sl2::jzero_word(qp.n),
        );
        let op = realize(&word, &qp.difference_rep());
        let support = op.as_shift().unwrap().support();
        assert!(support.contains(&-2));
    }

    #[test]
    fn charlier_block_is_triangular_with_diagonal() {
        // A1 = A2 = A+ = 0: the word is A3 J0_n + A4 J-_n, whose diagonal on
        // the falling basis is A3 (k - n/2), here -k + 3/2.
        let qp = charlier_qes(2, 3);
        let m = invariant_block(&qp, &qp.difference_rep()).unwrap();
        assert!(m.is_upper_triangular());
        for k in 0..=3usize {
            assert_eq!(m.get(k, k), &(rat_int(-(k as i64)) + rat(3, 2)));
        }
    }

    #[test]
    fn scalar_block_at_n_zero() {
        let qp = QesParams::new(
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat_int(0),
            rat(9, 2),
            rat_int(1),
            0,
        );
        let m = invariant_block(&qp, &HeisenbergRep::Differential).unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.get(0, 0), &rat(9, 2));
        let cp = m.char_poly();
        assert_eq!(cp.coeffs(), &[rat(-9, 2), rat_int(1)]);
    }

    #[test]
    fn consistency_with_solvable_spectrum() {
        // At n = 0 and A+ = 0 the word reduces to the solvable element, so
        // the 1x1 block entry is lambda_0. For n > 0 the n-labeled J0
        // shifts the diagonal by -A3 n/2 relative to the solvable spectrum.
        let qp0 = charlier_qes(3, 0);
        let m = invariant_block(&qp0, &qp0.difference_rep()).unwrap();
        assert_eq!(m.get(0, 0), &eigenvalue(&qp0.solvable_part(), 0));

        let qp = charlier_qes(3, 4);
        let m = invariant_block(&qp, &qp.difference_rep()).unwrap();
        for k in 0..=4usize {
            assert_eq!(
                m.get(k, k),
                &(eigenvalue(&qp.solvable_part(), k) + rat_int(2))
            );
        }
    }

    #[test]
    fn annihilator_does_not_change_the_block() {
        let qp = pinned();
        let b_coeffs = [rat_int(2), rat(1, 3)];
        let word = qp.word() + crate::sl2::annihilator_word(&b_coeffs, qp.n);
        for rep in [HeisenbergRep::Differential, qp.difference_rep()] {
            let with = realize(&word, &rep);
            let basis = qp.natural_basis(&rep);
            let dim = qp.n as usize + 1;
            let without = build_qes(&qp, &rep);
            for j in 0..dim {
                let e_j = match &basis {
                    Basis::Monomial => Poly::x_pow(j),
                    Basis::Falling { delta } => crate::exactpoly::falling_factorial(j, delta),
                };
                assert_eq!(with.apply(&e_j), without.apply(&e_j));
            }
        }
    }

    #[test]
    fn isospectral_across_reps_small_sweep() {
        for n in 0..=3u32 {
            let qp = QesParams::new(
                rat(1, 2),
                rat(-2, 3),
                rat_int(1),
                rat(3, 4),
                rat_int(-1),
                rat(1, 5),
                rat(1, 2),
                n,
            );
            assert!(three_point_check(&qp));
            assert!(qes_isospectral_check(&qp).unwrap());
        }
    }
}
