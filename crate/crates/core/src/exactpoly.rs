//! Exact rational scalars, dense univariate polynomials, and the basis
//! machinery for monomials and delta-falling-factorials, including the
//! umbral map between the two.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// The coefficient field: exact rationals over arbitrary-precision integers.
/// Always stored reduced, denominator positive.
pub type Rat = Ratio<BigInt>;

/// Integer as a `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `num/den` as a `Rat`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "p/q" or "p" (arbitrary precision, optional sign).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().map_err(|_| bad())?,
            d.trim().parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (s.trim().parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

/// Canonical string form: "p/q", with "/q" omitted when q = 1.
pub fn rat_to_string(r: &Rat) -> alloc::string::String {
    r.to_string()
}

/// Basis tag for polynomial coefficient vectors.
///
/// `Falling { delta }` means element k is the falling factorial
/// x(x - delta)(x - 2 delta) ... (x - (k-1) delta).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Falling { delta: Rat },
}

impl Basis {
    pub fn falling(delta: Rat) -> Basis {
        assert!(!delta.is_zero(), "falling-factorial basis needs delta != 0");
        Basis::Falling { delta }
    }

    pub fn is_monomial(&self) -> bool {
        matches!(self, Basis::Monomial)
    }
}

/// Dense univariate polynomial over `Rat`, coefficients lowest degree
/// first, with a basis tag. Highest stored coefficient is nonzero; the
/// zero polynomial has an empty coefficient list.
#[derive(Clone, Debug)]
pub struct Poly {
    coeffs: Vec<Rat>,
    basis: Basis,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        // Zero compares equal regardless of the basis tag.
        if self.coeffs.is_empty() && other.coeffs.is_empty() {
            return true;
        }
        self.basis == other.basis && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new(), basis: Basis::Monomial }
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::from_coeffs(alloc::vec![c], Basis::Monomial)
    }

    /// The monomial x^k.
    pub fn x_pow(k: usize) -> Poly {
        let mut coeffs = alloc::vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::one();
        Poly { coeffs, basis: Basis::Monomial }
    }

    /// x as a polynomial.
    pub fn x() -> Poly {
        Poly::x_pow(1)
    }

    pub fn from_coeffs(coeffs: Vec<Rat>, basis: Basis) -> Poly {
        let mut p = Poly { coeffs, basis };
        p.trim();
        p
    }

    /// Convenience: small integer coefficients, monomial basis, lowest first.
    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect(), Basis::Monomial)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of index k (zero when beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    fn check_monomial(&self) -> Result<()> {
        if self.basis.is_monomial() {
            Ok(())
        } else {
            Err(Error::NonMonomialBasis)
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.basis, other.basis, "basis mismatch in add");
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Poly::from_coeffs(coeffs, self.basis.clone())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            basis: self.basis.clone(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            basis: self.basis.clone(),
        }
    }

    /// Exact product; both operands must be in the monomial basis.
    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero());
        }
        if !self.basis.is_monomial() || !other.basis.is_monomial() {
            return Err(Error::BasisMismatch);
        }
        let mut coeffs = alloc::vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Ok(Poly::from_coeffs(coeffs, Basis::Monomial))
    }

    /// q with q(x) = p(x + c), by Horner over (x + c). Monomial basis only.
    pub fn shift(&self, c: &Rat) -> Result<Poly> {
        self.check_monomial()?;
        if c.is_zero() {
            return Ok(self.clone());
        }
        let mut result: Vec<Rat> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // result := result * (x + c) + a
            let mut next = alloc::vec![Rat::zero(); result.len() + 1];
            for (i, r) in result.iter().enumerate() {
                next[i + 1] += r.clone();
                next[i] += r * c;
            }
            if next.is_empty() {
                next.push(Rat::zero());
            }
            next[0] += a.clone();
            result = next;
        }
        Ok(Poly::from_coeffs(result, Basis::Monomial))
    }

    /// Euclidean division: p = d*q + r with deg r < deg d. Monomial basis.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        self.check_monomial()?;
        d.check_monomial()?;
        let dd = d.coeffs.len() - 1;
        let lead = d.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot: Vec<Rat> = if self.coeffs.len() > dd {
            alloc::vec![Rat::zero(); self.coeffs.len() - dd]
        } else {
            Vec::new()
        };
        while rem.len() > dd {
            if rem.last().unwrap().is_zero() {
                rem.pop();
                continue;
            }
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &factor * c;
            }
            rem.pop();
            quot[k] = factor;
        }
        Ok((
            Poly::from_coeffs(quot, Basis::Monomial),
            Poly::from_coeffs(rem, Basis::Monomial),
        ))
    }

    /// d/dx. Monomial basis.
    pub fn derivative(&self) -> Result<Poly> {
        self.check_monomial()?;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        Ok(Poly::from_coeffs(coeffs, Basis::Monomial))
    }

    /// Exact evaluation in either basis.
    pub fn eval(&self, x: &Rat) -> Rat {
        match &self.basis {
            Basis::Monomial => {
                let mut acc = Rat::zero();
                for c in self.coeffs.iter().rev() {
                    acc = acc * x + c;
                }
                acc
            }
            Basis::Falling { delta } => {
                let mut acc = Rat::zero();
                let mut ff = Rat::one();
                for (k, c) in self.coeffs.iter().enumerate() {
                    if k > 0 {
                        ff *= x - rat_int(k as i64 - 1) * delta;
                    }
                    acc += c * &ff;
                }
                acc
            }
        }
    }

    /// Re-expresses the coefficient vector in `target`. Exact, invertible.
    pub fn change_basis(&self, target: &Basis) -> Poly {
        if self.is_zero() {
            return Poly { coeffs: Vec::new(), basis: target.clone() };
        }
        if &self.basis == target {
            return self.clone();
        }
        let mono = self.to_monomial();
        match target {
            Basis::Monomial => mono,
            Basis::Falling { delta } => mono.monomial_to_falling(delta),
        }
    }

    /// Expands any basis into monomial coefficients.
    pub fn to_monomial(&self) -> Poly {
        match &self.basis {
            Basis::Monomial => self.clone(),
            Basis::Falling { delta } => {
                // Horner over the falling-factorial ladder:
                // sum c_k x^(k) = c_0 + x(c_1 + (x - d)(c_2 + (x - 2d)(...)))
                let mut acc = Poly::zero();
                let m = self.coeffs.len();
                for k in (0..m).rev() {
                    if !acc.is_zero() {
                        let factor = Poly::from_coeffs(
                            alloc::vec![-(rat_int(k as i64) * delta), Rat::one()],
                            Basis::Monomial,
                        );
                        acc = acc.mul(&factor).expect("monomial product");
                    }
                    acc = acc.add(&Poly::constant(self.coeffs[k].clone()));
                }
                acc
            }
        }
    }

    fn monomial_to_falling(&self, delta: &Rat) -> Poly {
        // Repeated synthetic division by (x - k*delta): the remainder at
        // step k is the falling-basis coefficient c_k.
        let mut coeffs = Vec::new();
        let mut rem = self.coeffs.clone();
        let mut k: i64 = 0;
        while !rem.is_empty() {
            let root = rat_int(k) * delta;
            // synthetic division of rem by (x - root)
            let mut quot = alloc::vec![Rat::zero(); rem.len().saturating_sub(1)];
            let mut carry = Rat::zero();
            for i in (0..rem.len()).rev() {
                let v = &rem[i] + &carry * &root;
                if i == 0 {
                    coeffs.push(v);
                } else {
                    quot[i - 1] = v.clone();
                    carry = v;
                }
            }
            rem = quot;
            k += 1;
        }
        Poly::from_coeffs(coeffs, Basis::Falling { delta: delta.clone() })
    }

    /// The umbral map: reads the monomial coefficients alpha_k and returns
    /// sum alpha_k x^(k) expanded back into monomials. Linear, degree- and
    /// leading-coefficient-preserving.
    pub fn umbral_map(&self, delta: &Rat) -> Result<Poly> {
        self.check_monomial()?;
        let reinterpreted = Poly {
            coeffs: self.coeffs.clone(),
            basis: Basis::falling(delta.clone()),
        };
        Ok(reinterpreted.to_monomial())
    }
}

/// The falling factorial x^(k) = x(x - delta)...(x - (k-1) delta) as a
/// monomial-basis polynomial. k = 0 gives the constant 1.
pub fn falling_factorial(k: usize, delta: &Rat) -> Poly {
    let mut p = Poly::constant(Rat::one());
    for i in 0..k {
        let factor = Poly::from_coeffs(
            alloc::vec![-(rat_int(i as i64) * delta), Rat::one()],
            Basis::Monomial,
        );
        p = p.mul(&factor).expect("monomial product");
    }
    p
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = match &self.basis {
            Basis::Monomial => "x^",
            Basis::Falling { .. } => "x^(",
        };
        let close = if self.basis.is_monomial() { "" } else { ")" };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 && self.basis.is_monomial() {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{var}{k}{close}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}
