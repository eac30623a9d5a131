//! Dense tensors over the 3-dimensional frame.
//!
//! Components are stored row-major in frame indices, one slot per index.
//! Each slot is either covariant (takes a vector argument) or
//! contravariant (produces a vector component). A (1,1) endomorphism `T`
//! is stored with slots `[Down, Up]`, so `t[[j, k]]` is the `e_k`
//! component of `T(e_j)`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::frame::FrameManifold;
use crate::scalar::Rational;

pub const DIM: usize = 3;
pub const MAX_RANK: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variance {
    /// Covariant slot.
    Down,
    /// Contravariant slot.
    Up,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    slots: Vec<Variance>,
    data: Vec<Rational>,
}

impl Tensor {
    pub fn zeros(slots: &[Variance]) -> Self {
        assert!(slots.len() <= MAX_RANK, "rank {} exceeds {}", slots.len(), MAX_RANK);
        Self {
            slots: slots.to_vec(),
            data: vec![Rational::zero(); DIM.pow(slots.len() as u32)],
        }
    }

    pub fn from_fn(slots: &[Variance], mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let mut t = Self::zeros(slots);
        let rank = slots.len();
        let mut idx = vec![0usize; rank];
        for flat in 0..t.data.len() {
            unflatten(flat, &mut idx);
            t.data[flat] = f(&idx);
        }
        t
    }

    /// All-covariant tensor of the given rank.
    pub fn covariant(rank: usize, f: impl FnMut(&[usize]) -> Rational) -> Self {
        Self::from_fn(&vec![Variance::Down; rank], f)
    }

    /// A (1,1) tensor from a matrix whose column `j` holds `T(e_j)`.
    pub fn endomorphism(columns: &[[Rational; DIM]; DIM]) -> Self {
        Self::from_fn(&[Variance::Down, Variance::Up], |i| columns[i[0]][i[1]].clone())
    }

    /// The identity endomorphism.
    pub fn identity() -> Self {
        Self::from_fn(&[Variance::Down, Variance::Up], |i| {
            if i[0] == i[1] {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Variance] {
        &self.slots
    }

    /// `(covariant, contravariant)` slot counts.
    pub fn valence(&self) -> (usize, usize) {
        let down = self.slots.iter().filter(|v| **v == Variance::Down).count();
        (down, self.slots.len() - down)
    }

    pub fn components(&self) -> &[Rational] {
        &self.data
    }

    pub fn get(&self, idx: &[usize]) -> &Rational {
        &self.data[flatten(idx, self.rank())]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            slots: self.slots.clone(),
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Multi-indices and values of every nonzero component.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> + '_ {
        let rank = self.rank();
        self.data.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(flat, v)| {
            let mut idx = vec![0; rank];
            unflatten(flat, &mut idx);
            (idx, v)
        })
    }

    pub fn max_abs(&self) -> Rational {
        crate::scalar::max_abs(&self.data)
    }

    pub(crate) fn require_valence(&self, down: usize, up: usize) -> Result<()> {
        if self.valence() == (down, up) {
            Ok(())
        } else {
            Err(Error::BadValence {
                expected: format!("({down},{up})"),
                found: {
                    let (d, u) = self.valence();
                    format!("({d},{u})")
                },
            })
        }
    }

    /// True when a rank-2 tensor equals its transpose.
    pub fn is_symmetric(&self) -> bool {
        self.rank() == 2
            && (0..DIM).all(|i| (0..DIM).all(|j| self[[i, j]] == self[[j, i]]))
    }

    pub fn transpose(&self) -> Self {
        assert_eq!(self.rank(), 2);
        Self::from_fn(&[self.slots[1], self.slots[0]], |i| self[[i[1], i[0]]].clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.slots, other.slots, "slot layout mismatch");
        Self {
            slots: self.slots.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

fn flatten(idx: &[usize], rank: usize) -> usize {
    assert_eq!(idx.len(), rank, "index arity mismatch");
    idx.iter().fold(0, |acc, &i| {
        assert!(i < DIM, "frame index {i} out of range");
        acc * DIM + i
    })
}

fn unflatten(mut flat: usize, idx: &mut [usize]) {
    for slot in idx.iter_mut().rev() {
        *slot = flat % DIM;
        flat /= DIM;
    }
}

impl<const N: usize> Index<[usize; N]> for Tensor {
    type Output = Rational;
    fn index(&self, idx: [usize; N]) -> &Rational {
        &self.data[flatten(&idx, self.rank())]
    }
}

impl<const N: usize> IndexMut<[usize; N]> for Tensor {
    fn index_mut(&mut self, idx: [usize; N]) -> &mut Rational {
        let rank = self.rank();
        &mut self.data[flatten(&idx, rank)]
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        Tensor { slots: self.slots.clone(), data: self.data.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, v) in self.nonzero() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let label: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "[{}]={}", label.join(","), crate::scalar::format_rational(v))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Contracts slots `a` and `b` (0-based).
///
/// Mixed-variance pairs are traced directly; two covariant slots are traced
/// through the inverse metric and two contravariant slots through the metric.
pub fn tensor_contract(t: &Tensor, a: usize, b: usize, m: &FrameManifold) -> Result<Tensor> {
    let rank = t.rank();
    if a == b || a >= rank || b >= rank {
        return Err(Error::BadSlot(a, b, rank));
    }
    let (lo, hi) = (a.min(b), a.max(b));
    let weight = |i: usize, j: usize| -> Rational {
        match (t.slots[lo], t.slots[hi]) {
            (Variance::Down, Variance::Down) => m.inverse_metric()[i][j].clone(),
            (Variance::Up, Variance::Up) => m.metric()[i][j].clone(),
            _ => {
                if i == j {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            }
        }
    };
    let remaining: Vec<Variance> = t
        .slots
        .iter()
        .enumerate()
        .filter(|(s, _)| *s != lo && *s != hi)
        .map(|(_, v)| *v)
        .collect();
    let mut full = vec![0usize; rank];
    Ok(Tensor::from_fn(&remaining, |rest| {
        let mut acc = Rational::zero();
        for i in 0..DIM {
            for j in 0..DIM {
                let w = weight(i, j);
                if w.is_zero() {
                    continue;
                }
                let mut r = rest.iter();
                for (s, slot) in full.iter_mut().enumerate() {
                    *slot = if s == lo {
                        i
                    } else if s == hi {
                        j
                    } else {
                        *r.next().unwrap()
                    };
                }
                acc += w * t.get(&full);
            }
        }
        acc
    }))
}

/// `g^{ik} g^{jl} t_ij t_kl` for a (0,2) tensor.
pub fn tensor_norm_squared(t: &Tensor, m: &FrameManifold) -> Result<Rational> {
    t.require_valence(2, 0)?;
    let ginv = m.inverse_metric();
    let mut acc = Rational::zero();
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                for l in 0..DIM {
                    let w = &ginv[i][k] * &ginv[j][l];
                    if !w.is_zero() {
                        acc += w * &t[[i, j]] * &t[[k, l]];
                    }
                }
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::int;

    #[test]
    fn identity_trace_is_three() {
        let m = fixtures::hyp3();
        let t = tensor_contract(&Tensor::identity(), 0, 1, &m).unwrap();
        assert_eq!(t.rank(), 0);
        assert_eq!(t.components()[0], int(3));
    }

    #[test]
    fn metric_trace_is_three() {
        let m = fixtures::hyp3();
        let t = tensor_contract(&m.metric_tensor(), 0, 1, &m).unwrap();
        assert_eq!(t.components()[0], int(3));
    }

    #[test]
    fn bad_slots_rejected() {
        let m = fixtures::flat3();
        let g = m.metric_tensor();
        assert_eq!(tensor_contract(&g, 0, 0, &m), Err(Error::BadSlot(0, 0, 2)));
        assert_eq!(tensor_contract(&g, 0, 2, &m), Err(Error::BadSlot(0, 2, 2)));
    }

    #[test]
    fn norm_of_zero_and_metric() {
        let m = fixtures::hyp3();
        let zero = Tensor::covariant(2, |_| Rational::zero());
        assert_eq!(tensor_norm_squared(&zero, &m).unwrap(), int(0));
        assert_eq!(tensor_norm_squared(&m.metric_tensor(), &m).unwrap(), int(3));
        assert!(matches!(
            tensor_norm_squared(&Tensor::identity(), &m),
            Err(Error::BadValence { .. })
        ));
    }

    #[test]
    fn norm_uses_inverse_metric() {
        // g = diag(2,1,1): |g|^2 is still dim = 3, while |e1 (x) e1| = 1/4.
        let m = crate::frame::build_manifold(
            &[],
            Some([[int(2), int(0), int(0)], [int(0), int(1), int(0)], [int(0), int(0), int(1)]]),
        )
        .unwrap();
        assert_eq!(tensor_norm_squared(&m.metric_tensor(), &m).unwrap(), int(3));
        let e11 = Tensor::covariant(2, |i| if i == [0, 0] { int(1) } else { int(0) });
        assert_eq!(tensor_norm_squared(&e11, &m).unwrap(), crate::scalar::frac(1, 4));
    }

    #[test]
    fn display_lists_nonzero() {
        let t = Tensor::covariant(2, |i| if i == [0, 2] { int(-1) } else { int(0) });
        assert_eq!(t.to_string(), "[1,3]=-1");
        assert_eq!(Tensor::covariant(1, |_| int(0)).to_string(), "0");
    }
}
