//! Parameter presets mapping the general three-point operator to the
//! Hahn, analytically-continued Hahn, Meixner, and Charlier equations,
//! plus the x^(N) factorization of the higher Hahn polynomials.

use num_traits::{One, Signed, Zero};

use crate::exactpoly::{falling_factorial, rat_int, Poly, Rat};
use crate::solvable::{degenerate_pair, eigenpoly_limit, eigenpolys, SolvableParams};
use crate::{Error, Result};

/// A named parameter substitution. All presets fix delta = 1, A5 = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyPreset {
    Hahn { alpha: Rat, beta: Rat, n_param: Rat },
    HahnTilde { mu: Rat, nu: Rat, n_param: Rat },
    Meixner { gamma: Rat, mu: Rat },
    Charlier { mu: Rat },
}

impl FamilyPreset {
    /// The substitution into (A1, A2, A3, A4, A5; delta = 1):
    ///     Hahn:      (-1, N - beta - 2, -alpha - beta - 1, (beta+1)(N-1), 0)
    ///     HahnTilde: (1, 2 - 2N - nu, 1 - 2N - mu - nu, (N+nu-1)(N-1), 0)
    ///     Meixner:   (0, -mu, mu - 1, gamma*mu, 0)
    ///     Charlier:  (0, 0, -1, mu, 0)
    pub fn params(&self) -> SolvableParams {
        let one = Rat::one;
        let two = || rat_int(2);
        let (a1, a2, a3, a4) = match self {
            FamilyPreset::Hahn { alpha, beta, n_param } => (
                -one(),
                n_param - beta - two(),
                -alpha - beta - one(),
                (beta + one()) * (n_param - one()),
            ),
            FamilyPreset::HahnTilde { mu, nu, n_param } => (
                one(),
                two() - two() * n_param - nu,
                one() - two() * n_param - mu - nu,
                (n_param + nu - one()) * (n_param - one()),
            ),
            FamilyPreset::Meixner { gamma, mu } => {
                (Rat::zero(), -mu.clone(), mu - one(), gamma * mu)
            }
            FamilyPreset::Charlier { mu } => (Rat::zero(), Rat::zero(), -one(), mu.clone()),
        };
        SolvableParams::new(a1, a2, a3, a4, Rat::zero(), one())
    }

    /// Monic degree-k eigenpolynomial of the preset's three-point operator
    /// in the difference representation, with its eigenvalue.
    ///
    /// The analytically-continued Hahn presets have coinciding eigenvalues
    /// (lambda_i = lambda_j whenever i + j = 2N + mu + nu - 1), so the
    /// plain triangular solve is ambiguous there; the classical polynomial
    /// is recovered as the exact perturbation limit instead.
    pub fn polynomial(&self, k: usize) -> Result<(Poly, Rat)> {
        let params = self.params();
        let rep = params.difference_rep();
        if degenerate_pair(&params, k).is_none() {
            let result = eigenpolys(&params, &rep, k)?;
            let entry = &result.entries[k];
            return Ok((entry.poly.clone(), entry.lambda.clone()));
        }
        eigenpoly_limit(&params, &rep, k)
    }

    fn integer_n(&self) -> Result<usize> {
        let n = match self {
            FamilyPreset::Hahn { n_param, .. } | FamilyPreset::HahnTilde { n_param, .. } => n_param,
            _ => return Err(Error::InvalidParameter("factorization needs a Hahn family")),
        };
        if !n.is_integer() || !n.is_positive() {
            return Err(Error::InvalidParameter("N must be a positive integer"));
        }
        // degrees in this artifact are small, the cast is safe
        let digits = n.to_integer();
        Ok(digits.try_into().map_err(|_| Error::InvalidParameter("N too large"))?)
    }

    /// Divides the degree-k eigenpolynomial (k >= N, N a positive integer)
    /// by the falling factorial x^(N) and returns the quotient. A nonzero
    /// remainder contradicts the factorization theorem and is an error.
    pub fn hahn_factorization(&self, k: usize) -> Result<Poly> {
        let n = self.integer_n()?;
        if k < n {
            return Err(Error::InvalidParameter("k must be at least N"));
        }
        let (poly, _) = self.polynomial(k)?;
        let divisor = falling_factorial(n, &Rat::one());
        let (quotient, remainder) = poly.divrem(&divisor)?;
        if !remainder.is_zero() {
            return Err(Error::NonzeroRemainder);
        }
        Ok(quotient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use crate::solvable::{eigenvalue, three_point_coefficients};

    fn hahn(alpha: Rat, beta: Rat, n: i64) -> FamilyPreset {
        FamilyPreset::Hahn { alpha, beta, n_param: rat_int(n) }
    }

    #[test]
    fn hahn_preset_parameters() {
        let p = hahn(Rat::zero(), Rat::zero(), 3).params();
        assert_eq!(
            (p.a1, p.a2, p.a3, p.a4, p.a5),
            (rat_int(-1), rat_int(1), rat_int(-1), rat_int(2), rat_int(0))
        );
    }

    #[test]
    fn charlier_preset_parameters() {
        let p = FamilyPreset::Charlier { mu: rat(7, 2) }.params();
        assert_eq!(
            (p.a1, p.a2, p.a3, p.a4, p.a5),
            (rat_int(0), rat_int(0), rat_int(-1), rat(7, 2), rat_int(0))
        );
    }

    #[test]
    fn hahn_tilde_preset_parameters() {
        let p = FamilyPreset::HahnTilde {
            mu: Rat::zero(),
            nu: Rat::zero(),
            n_param: rat_int(2),
        }
        .params();
        assert_eq!(
            (p.a1, p.a2, p.a3, p.a4, p.a5),
            (rat_int(1), rat_int(-2), rat_int(-3), rat_int(1), rat_int(0))
        );
    }

    #[test]
    fn charlier_three_point_functions() {
        let p = FamilyPreset::Charlier { mu: rat_int(4) }.params();
        let (a, b, c) = three_point_coefficients(&p);
        assert_eq!(a, Poly::from_ints(&[4]));
        assert_eq!(b, Poly::from_ints(&[4, 1]));
        assert_eq!(c, Poly::from_ints(&[0, 1]));
    }

    #[test]
    fn family_polynomial_cases() {
        let (p, lambda) = FamilyPreset::Charlier { mu: rat_int(2) }.polynomial(1).unwrap();
        assert_eq!((p, lambda), (Poly::from_ints(&[-2, 1]), rat_int(-1)));

        // k = 0 is always the constant 1 with eigenvalue 0
        let (p, lambda) = hahn(rat(1, 2), Rat::zero(), 4).polynomial(0).unwrap();
        assert_eq!((p, lambda), (Poly::from_ints(&[1]), rat_int(0)));

        // Hahn(0,0,3) k = 2: lambda = -6, residual checked at grid points
        let preset = hahn(Rat::zero(), Rat::zero(), 3);
        let (p, lambda) = preset.polynomial(2).unwrap();
        assert_eq!(lambda, rat_int(-6));
        let (a, b, c) = three_point_coefficients(&preset.params());
        for x in 0..=10 {
            let x = rat_int(x);
            let lhs = a.eval(&x) * p.eval(&(&x + rat_int(1)))
                - b.eval(&x) * p.eval(&x)
                + c.eval(&x) * p.eval(&(&x - rat_int(1)));
            assert_eq!(lhs, &lambda * p.eval(&x));
        }
    }

    #[test]
    fn eigenvalue_specializations() {
        // Hahn: -k(k + alpha + beta + 1)
        let p = hahn(rat(1, 2), rat_int(1), 4).params();
        for k in 0..=6i64 {
            let expected = -rat_int(k) * (rat_int(k) + rat(1, 2) + rat_int(1) + rat_int(1));
            assert_eq!(eigenvalue(&p, k as usize), expected);
        }
        // Meixner: (mu - 1)k; Charlier: -k
        let m = FamilyPreset::Meixner { gamma: rat_int(1), mu: rat(1, 2) }.params();
        assert_eq!(eigenvalue(&m, 3), rat(-3, 2));
        let c = FamilyPreset::Charlier { mu: rat_int(3) }.params();
        assert_eq!(eigenvalue(&c, 5), rat_int(-5));
        // HahnTilde: k^2 + (1 - 2N - mu - nu)k
        let h = FamilyPreset::HahnTilde { mu: rat_int(1), nu: Rat::zero(), n_param: rat_int(2) }
            .params();
        for k in 0..=5i64 {
            assert_eq!(eigenvalue(&h, k as usize), rat_int(k * k) + rat_int(-4 * k));
        }
    }

    #[test]
    fn hahn_factorization_monic_base_case() {
        // h_3 for N = 3 is monic of degree 3 and divisible by x(x-1)(x-2)
        let q = hahn(Rat::zero(), Rat::zero(), 3).hahn_factorization(3).unwrap();
        assert_eq!(q, Poly::from_ints(&[1]));
    }

    #[test]
    fn hahn_factorization_degree_one_quotient() {
        let q = hahn(Rat::zero(), Rat::zero(), 2).hahn_factorization(3).unwrap();
        assert_eq!(q.degree(), Some(1));
        assert!(q.is_monic());
    }

    #[test]
    fn hahn_tilde_factorization_base_case() {
        let preset =
            FamilyPreset::HahnTilde { mu: Rat::zero(), nu: Rat::zero(), n_param: rat_int(2) };
        assert_eq!(preset.hahn_factorization(2).unwrap(), Poly::from_ints(&[1]));
    }

    #[test]
    fn factorization_rejects_bad_input() {
        let meixner = FamilyPreset::Meixner { gamma: rat_int(1), mu: rat(1, 3) };
        assert!(meixner.hahn_factorization(2).is_err());
        let frac_n = FamilyPreset::Hahn {
            alpha: Rat::zero(),
            beta: Rat::zero(),
            n_param: rat(3, 2),
        };
        assert!(frac_n.hahn_factorization(2).is_err());
        assert!(hahn(Rat::zero(), Rat::zero(), 3).hahn_factorization(2).is_err());
    }

    #[test]
    fn discrete_grid_sanity_for_hahn() {
        // the eigen-relation holds at x = 0..N-1 in particular
        let preset = hahn(rat_int(1), rat(1, 2), 4);
        let (p, lambda) = preset.polynomial(3).unwrap();
        let (a, b, c) = three_point_coefficients(&preset.params());
        for x in 0..4i64 {
            let x = rat_int(x);
            let lhs = a.eval(&x) * p.eval(&(&x + rat_int(1)))
                - b.eval(&x) * p.eval(&x)
                + c.eval(&x) * p.eval(&(&x - rat_int(1)));
            assert_eq!(lhs, &lambda * p.eval(&x));
        }
    }
}
