//! Bihomogeneous forms as dense coefficient vectors.
//!
//! A form of bidegree `(a, b)` has `(a+1)(b+1)` coefficients; entry
//! `i * (b+1) + j` multiplies `x0^(a-i) x1^i y0^(b-j) y1^j`.

use super::field::Field;
use crate::staircase::Bidegree;

/// `dim R_(a,b) = (a+1)(b+1)`.
pub fn space_dim(d: Bidegree) -> usize {
    (d.a + 1) * (d.b + 1)
}

#[inline]
pub(crate) fn index(d: Bidegree, i: usize, j: usize) -> usize {
    i * (d.b + 1) + j
}

/// One of the four variables, by its degree and whether it is `x1`/`y1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X0,
    X1,
    Y0,
    Y1,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X0, Var::X1, Var::Y0, Var::Y1];

    pub fn degree(self) -> Bidegree {
        match self {
            Var::X0 | Var::X1 => Bidegree::new(1, 0),
            Var::Y0 | Var::Y1 => Bidegree::new(0, 1),
        }
    }

    /// Exponent shift `(Δi, Δj)` in the `x1`/`y1` indices.
    fn shift(self) -> (usize, usize) {
        match self {
            Var::X0 | Var::Y0 => (0, 0),
            Var::X1 => (1, 0),
            Var::Y1 => (0, 1),
        }
    }
}

/// Multiplies a coefficient vector of bidegree `d` by a variable.
pub fn mul_var<F: Field>(f: &F, coeffs: &[F::Elem], d: Bidegree, z: Var) -> Vec<F::Elem> {
    let target = d + z.degree();
    let (di, dj) = z.shift();
    let mut out = vec![f.zero(); space_dim(target)];
    for i in 0..=d.a {
        for j in 0..=d.b {
            out[index(target, i + di, j + dj)] = coeffs[index(d, i, j)].clone();
        }
    }
    out
}

/// Multiplies by the monomial `x0^(m.a-p) x1^p y0^(m.b-q) y1^q`.
pub fn mul_monomial<F: Field>(f: &F, coeffs: &[F::Elem], d: Bidegree, m: Bidegree, p: usize, q: usize) -> Vec<F::Elem> {
    let target = d + m;
    let mut out = vec![f.zero(); space_dim(target)];
    for i in 0..=d.a {
        for j in 0..=d.b {
            out[index(target, i + p, j + q)] = coeffs[index(d, i, j)].clone();
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct BiForm<E> {
    deg: Bidegree,
    coeffs: Vec<E>,
}

impl<E: Clone> BiForm<E> {
    pub fn new(deg: Bidegree, coeffs: Vec<E>) -> Self {
        assert_eq!(coeffs.len(), space_dim(deg), "coefficient count must match bidegree");
        Self { deg, coeffs }
    }

    pub fn degree(&self) -> Bidegree {
        self.deg
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// Coefficient of `x0^(a-i) x1^i y0^(b-j) y1^j`.
    pub fn coeff(&self, i: usize, j: usize) -> &E {
        &self.coeffs[index(self.deg, i, j)]
    }
}

impl<E: Clone + PartialEq> BiForm<E> {
    pub fn constant<F: Field<Elem = E>>(f: &F, c: E) -> Self {
        let _ = f;
        Self { deg: Bidegree::ZERO, coeffs: vec![c] }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.coeffs.iter().all(|c| f.is_zero(c))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let deg = self.deg + other.deg;
        let mut out = vec![f.zero(); space_dim(deg)];
        for i in 0..=self.deg.a {
            for j in 0..=self.deg.b {
                let c = self.coeff(i, j);
                if f.is_zero(c) {
                    continue;
                }
                for k in 0..=other.deg.a {
                    for l in 0..=other.deg.b {
                        let slot = &mut out[index(deg, i + k, j + l)];
                        *slot = f.mul_add(c, other.coeff(k, l), slot);
                    }
                }
            }
        }
        Self { deg, coeffs: out }
    }

    /// Value at `([x0:x1], [y0:y1])`.
    pub fn eval<F: Field<Elem = E>>(&self, f: &F, x: (&E, &E), y: (&E, &E)) -> E {
        let mut acc = f.zero();
        for i in 0..=self.deg.a {
            let xm = f.mul(&f.pow(x.0, (self.deg.a - i) as u32), &f.pow(x.1, i as u32));
            for j in 0..=self.deg.b {
                let ym = f.mul(&f.pow(y.0, (self.deg.b - j) as u32), &f.pow(y.1, j as u32));
                acc = f.add(&acc, &f.mul(self.coeff(i, j), &f.mul(&xm, &ym)));
            }
        }
        acc
    }

    /// Rows spanning `self · R_m`, one per monomial of bidegree `m`.
    pub fn multiples<F: Field<Elem = E>>(&self, f: &F, m: Bidegree) -> Vec<Vec<E>> {
        let mut rows = Vec::with_capacity(space_dim(m));
        for p in 0..=m.a {
            for q in 0..=m.b {
                rows.push(mul_monomial(f, &self.coeffs, self.deg, m, p, q));
            }
        }
        rows
    }
}

/// Builds a form from `(x0_exp, x1_exp, y0_exp, y1_exp, coefficient)` terms.
pub fn from_terms<F: Field>(f: &F, terms: &[(usize, usize, usize, usize, i64)]) -> BiForm<F::Elem> {
    let (a0, a1, b0, b1, _) = terms[0];
    let deg = Bidegree::new(a0 + a1, b0 + b1);
    let mut coeffs = vec![f.zero(); space_dim(deg)];
    for &(e0, e1, g0, g1, c) in terms {
        assert_eq!(Bidegree::new(e0 + e1, g0 + g1), deg, "terms must share a bidegree");
        let slot = &mut coeffs[index(deg, e1, g1)];
        *slot = f.add(slot, &f.int(c));
    }
    BiForm::new(deg, coeffs)
}
