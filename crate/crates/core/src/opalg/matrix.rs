use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactpoly::{Basis, Poly, Rat};
use crate::opalg::Operator;
use crate::{Error, Result};

/// Exact dense square matrix over `Rat`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixQ {
    dim: usize,
    data: Vec<Rat>,
}

impl MatrixQ {
    pub fn zero(dim: usize) -> MatrixQ {
        MatrixQ { dim, data: alloc::vec![Rat::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> MatrixQ {
        let mut m = MatrixQ::zero(dim);
        for i in 0..dim {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> MatrixQ {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            assert_eq!(row.len(), dim, "matrix rows must have length dim");
            data.extend(row);
        }
        MatrixQ { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.dim + j] = v;
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn diagonal(&self) -> Vec<Rat> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> Rat {
        self.diagonal().into_iter().fold(Rat::zero(), |acc, v| acc + v)
    }

    pub fn mul(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = MatrixQ::zero(self.dim);
        for i in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.dim {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &MatrixQ) -> MatrixQ {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        MatrixQ {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &Rat) -> MatrixQ {
        MatrixQ { dim: self.dim, data: self.data.iter().map(|a| a * c).collect() }
    }

    fn add_scalar_diag(&self, c: &Rat) -> MatrixQ {
        let mut m = self.clone();
        for i in 0..self.dim {
            let v = m.get(i, i) + c;
            m.set(i, i, v);
        }
        m
    }

    pub fn is_lower_triangular(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// True when every entry below the diagonal is zero. With columns
    /// holding operator images, this is the matrix shape of a
    /// degree-non-increasing operator.
    pub fn is_upper_triangular(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..i {
                if !self.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Exact monic characteristic polynomial det(t*I - M) via the
    /// Faddeev-LeVerrier recurrence; divisions are by integers only.
    pub fn char_poly(&self) -> Poly {
        let n = self.dim;
        if n == 0 {
            return Poly::constant(Rat::one());
        }
        // coeffs[n] = 1, coeffs[n-k] = c_k
        let mut coeffs = alloc::vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = self.clone();
        let mut c_prev;
        for k in 1..=n {
            if k > 1 {
                m = self.mul(&m);
            }
            c_prev = -m.trace() / crate::exactpoly::rat_int(k as i64);
            coeffs[n - k] = c_prev.clone();
            if k < n {
                m = m.add_scalar_diag(&c_prev);
            }
        }
        Poly::from_coeffs(coeffs, Basis::Monomial)
    }

    /// Evaluates a monomial-basis polynomial at the matrix (Horner).
    pub fn eval_poly(&self, p: &Poly) -> MatrixQ {
        let mut acc = MatrixQ::zero(self.dim);
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc).add_scalar_diag(c);
        }
        acc
    }
}

/// Basis element k of a basis, expanded into monomial coefficients.
pub(crate) fn basis_element(basis: &Basis, k: usize) -> Poly {
    match basis {
        Basis::Monomial => Poly::x_pow(k),
        Basis::Falling { delta } => crate::exactpoly::falling_factorial(k, delta),
    }
}

/// Exact (dmax+1)-dimensional matrix of an operator on span{e_0..e_dmax}:
/// column j holds the coefficients of L(e_j) in the basis. Fails loudly if
/// any image needs degree beyond dmax.
pub fn matrix_in_basis(op: &Operator, basis: &Basis, dmax: usize) -> Result<MatrixQ> {
    let dim = dmax + 1;
    let mut m = MatrixQ::zero(dim);
    for j in 0..dim {
        let image = op.apply(&basis_element(basis, j));
        let expressed = image.change_basis(basis);
        if expressed.coeffs().len() > dim {
            return Err(Error::ImageEscapesTruncation {
                column: j,
                needed_degree: expressed.coeffs().len() - 1,
            });
        }
        for (i, c) in expressed.coeffs().iter().enumerate() {
            m.set(i, j, c.clone());
        }
    }
    Ok(m)
}
