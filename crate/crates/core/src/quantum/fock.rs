//! Truncated number-state basis over a chosen set of modes.

use std::fmt;
use std::str::FromStr;

use nalgebra::DVector;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::QuantumState;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    X,
    Y,
    Z,
}

impl Direction {
    pub fn is_axial(self) -> bool {
        self == Direction::Z
    }
}

/// A single oscillator: a direction and a 1-based mode number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ActiveMode {
    pub direction: Direction,
    pub mode: usize,
}

impl ActiveMode {
    pub fn new(direction: Direction, mode: usize) -> Self {
        Self { direction, mode }
    }
    pub fn x(mode: usize) -> Self {
        Self::new(Direction::X, mode)
    }
    pub fn y(mode: usize) -> Self {
        Self::new(Direction::Y, mode)
    }
    pub fn z(mode: usize) -> Self {
        Self::new(Direction::Z, mode)
    }
}

impl fmt::Display for ActiveMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = match self.direction {
            Direction::X => 'x',
            Direction::Y => 'y',
            Direction::Z => 'z',
        };
        write!(f, "{d}{}", self.mode)
    }
}

/// Parses labels such as `z5` or `X6`.
impl FromStr for ActiveMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let direction = match chars.next().map(|c| c.to_ascii_lowercase()) {
            Some('x') => Direction::X,
            Some('y') => Direction::Y,
            Some('z') => Direction::Z,
            _ => return Err(Error::InvalidParameter(format!("bad mode label '{s}'"))),
        };
        let mode: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad mode label '{s}'")))?;
        if mode == 0 {
            return Err(Error::InvalidParameter(format!("mode numbers start at 1: '{s}'")));
        }
        Ok(Self { direction, mode })
    }
}

/// Product basis `⊗_k {|0⟩, …, |cutoff_k⟩}`. The first active mode is the
/// most significant digit of the flat index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockBasis {
    pub modes: Vec<ActiveMode>,
    pub cutoffs: Vec<usize>,
}

impl FockBasis {
    pub fn new(modes: Vec<ActiveMode>, cutoffs: Vec<usize>) -> Result<Self> {
        if modes.len() != cutoffs.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} modes but {} cutoffs",
                modes.len(),
                cutoffs.len()
            )));
        }
        for (i, m) in modes.iter().enumerate() {
            if m.mode == 0 {
                return Err(Error::InvalidParameter("mode numbers start at 1".into()));
            }
            if modes[..i].contains(m) {
                return Err(Error::InvalidParameter(format!("mode {m} listed twice")));
            }
        }
        let basis = Self { modes, cutoffs };
        basis
            .cutoffs
            .iter()
            .try_fold(1usize, |acc, &c| acc.checked_mul(c + 1))
            .ok_or_else(|| Error::InvalidParameter("basis dimension overflows".into()))?;
        Ok(basis)
    }

    /// Same cutoff on every mode.
    pub fn uniform(modes: Vec<ActiveMode>, cutoff: usize) -> Result<Self> {
        let cutoffs = vec![cutoff; modes.len()];
        Self::new(modes, cutoffs)
    }

    pub fn dimension(&self) -> usize {
        self.cutoffs.iter().map(|c| c + 1).product()
    }

    pub fn position(&self, mode: ActiveMode) -> Option<usize> {
        self.modes.iter().position(|&m| m == mode)
    }

    pub fn occupations(&self, mut index: usize) -> Vec<usize> {
        let mut occ = vec![0; self.modes.len()];
        for k in (0..self.modes.len()).rev() {
            let radix = self.cutoffs[k] + 1;
            occ[k] = index % radix;
            index /= radix;
        }
        occ
    }

    /// Flat index of an occupation list, or `None` if it exceeds a cutoff.
    pub fn index(&self, occ: &[usize]) -> Option<usize> {
        if occ.len() != self.modes.len() {
            return None;
        }
        let mut index = 0;
        for (k, &n) in occ.iter().enumerate() {
            if n > self.cutoffs[k] {
                return None;
            }
            index = index * (self.cutoffs[k] + 1) + n;
        }
        Some(index)
    }

    /// Index of the state with the listed modes occupied and all others empty.
    pub fn index_of(&self, occupied: &[(ActiveMode, usize)]) -> Result<usize> {
        let mut occ = vec![0; self.modes.len()];
        for &(mode, n) in occupied {
            let k = self
                .position(mode)
                .ok_or_else(|| Error::InvalidParameter(format!("mode {mode} is not active")))?;
            occ[k] += n;
        }
        self.index(&occ)
            .ok_or_else(|| Error::InvalidParameter("occupation exceeds the cutoff".into()))
    }

    pub fn number_state(&self, occupied: &[(ActiveMode, usize)]) -> Result<QuantumState> {
        let i = self.index_of(occupied)?;
        let mut amplitudes = DVector::from_element(self.dimension(), C64::new(0.0, 0.0));
        amplitudes[i] = C64::new(1.0, 0.0);
        Ok(QuantumState { amplitudes, time: 0.0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        let b = FockBasis::new(vec![ActiveMode::z(5), ActiveMode::x(5), ActiveMode::x(6)], vec![2, 1, 3])
            .unwrap();
        assert_eq!(b.dimension(), 24);
        for i in 0..24 {
            assert_eq!(b.index(&b.occupations(i)), Some(i));
        }
        assert_eq!(b.index(&[1, 0, 0]), Some(8));
        assert_eq!(b.index(&[0, 2, 0]), None);
    }

    #[test]
    fn rejects_duplicates_and_mismatch() {
        assert!(FockBasis::uniform(vec![ActiveMode::z(2), ActiveMode::z(2)], 1).is_err());
        assert!(FockBasis::new(vec![ActiveMode::z(2)], vec![1, 1]).is_err());
    }

    #[test]
    fn labels_parse() {
        assert_eq!("z5".parse::<ActiveMode>().unwrap(), ActiveMode::z(5));
        assert_eq!(" Y6".parse::<ActiveMode>().unwrap(), ActiveMode::y(6));
        assert!("w1".parse::<ActiveMode>().is_err());
        assert!("x0".parse::<ActiveMode>().is_err());
        assert_eq!(ActiveMode::x(3).to_string(), "x3");
    }

    #[test]
    fn number_state_is_normalized() {
        let b = FockBasis::uniform(vec![ActiveMode::x(2), ActiveMode::y(2)], 2).unwrap();
        let s = b.number_state(&[(ActiveMode::y(2), 1)]).unwrap();
        assert_eq!(s.amplitudes[1], C64::new(1.0, 0.0));
        assert!((s.norm() - 1.0).abs() < 1e-15);
        assert!(b.number_state(&[(ActiveMode::z(2), 1)]).is_err());
    }
}
