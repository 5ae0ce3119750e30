use crate::rational::{int, Rational};
use num_traits::{One, Zero};
use std::ops::Mul;

/// A 2×2 rational matrix acting on binary forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap2(pub [[Rational; 2]; 2]);

/// A 3×3 rational matrix acting on ternary forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap3(pub [[Rational; 3]; 3]);

impl LinearMap2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        LinearMap2([[a, b], [c, d]])
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Self {
        LinearMap2(m.map(|r| r.map(int)))
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]])
    }

    pub fn det(&self) -> Rational {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.0.clone();
        LinearMap2([[a, c], [b, d]])
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let m = &self.0;
        Some(LinearMap2([[&m[1][1] / &d, -&m[0][1] / &d], [-&m[1][0] / &d, &m[0][0] / &d]]))
    }
}

impl Mul for &LinearMap2 {
    type Output = LinearMap2;
    fn mul(self, o: &LinearMap2) -> LinearMap2 {
        let mut r: [[Rational; 2]; 2] = Default::default();
        for (i, row) in r.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = &self.0[i][0] * &o.0[0][j] + &self.0[i][1] * &o.0[1][j];
            }
        }
        LinearMap2(r)
    }
}

impl LinearMap3 {
    pub fn from_i64(m: [[i64; 3]; 3]) -> Self {
        LinearMap3(m.map(|r| r.map(int)))
    }

    pub fn identity() -> Self {
        Self::diag(Rational::one(), Rational::one(), Rational::one())
    }

    pub fn diag(a: Rational, b: Rational, c: Rational) -> Self {
        let z = Rational::zero;
        LinearMap3([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    pub fn scalar(l: Rational) -> Self {
        Self::diag(l.clone(), l.clone(), l)
    }

    pub fn det(&self) -> Rational {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        LinearMap3(std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone())))
    }

    /// Adjugate matrix, `adj(M)·M = det(M)·Id`.
    pub fn adjugate(&self) -> Self {
        let m = &self.0;
        let cof = |i: usize, j: usize| {
            let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
            let c: Vec<usize> = (0..3).filter(|&x| x != j).collect();
            let minor = &m[r[0]][c[0]] * &m[r[1]][c[1]] - &m[r[0]][c[1]] * &m[r[1]][c[0]];
            if (i + j).is_multiple_of(2) {
                minor
            } else {
                -minor
            }
        };
        LinearMap3(std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i))))
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let a = self.adjugate();
        Some(LinearMap3(a.0.map(|r| r.map(|e| e / &d))))
    }

    pub fn trace(&self) -> Rational {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }

    pub fn apply(&self, v: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|i| (0..3).map(|j| &self.0[i][j] * &v[j]).sum())
    }
}

impl Mul for &LinearMap3 {
    type Output = LinearMap3;
    fn mul(self, o: &LinearMap3) -> LinearMap3 {
        LinearMap3(std::array::from_fn(|i| std::array::from_fn(|j| (0..3).map(|k| &self.0[i][k] * &o.0[k][j]).sum())))
    }
}
