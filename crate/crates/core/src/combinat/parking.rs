use crate::combinat::perm::Permutation;
use crate::error::{Error, Result};

/// A preference sequence `(π1, ..., πn)` under which every car parks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction {
    prefs: Vec<usize>,
}

/// True iff every entry lies in `1..=n` and the sorted sequence satisfies
/// `sorted[j-1] <= j`.
pub fn is_parking_function(prefs: &[i64]) -> bool {
    let n = prefs.len() as i64;
    if prefs.iter().any(|&p| p < 1 || p > n) {
        return false;
    }
    let mut sorted = prefs.to_vec();
    sorted.sort_unstable();
    sorted.iter().zip(1..).all(|(&p, j)| p <= j)
}

impl ParkingFunction {
    pub fn new(prefs: Vec<usize>) -> Result<Self> {
        let signed: Vec<i64> = prefs.iter().map(|&p| p as i64).collect();
        if prefs.is_empty() || !is_parking_function(&signed) {
            return Err(Error::NotParkingFunction(signed));
        }
        Ok(ParkingFunction { prefs })
    }

    pub(crate) fn from_prefs_unchecked(prefs: Vec<usize>) -> Self {
        debug_assert!(ParkingFunction::new(prefs.clone()).is_ok());
        ParkingFunction { prefs }
    }

    pub fn n(&self) -> usize {
        self.prefs.len()
    }

    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }

    /// `C(n+1, 2) - Σ πi`, always in `0..=C(n, 2)`.
    pub fn cosum(&self) -> usize {
        cosum(&self.prefs)
    }

    /// Positions with `πi > i`.
    pub fn excedances(&self) -> usize {
        excedances(&self.prefs)
    }

    /// Runs the parking procedure; car `i` ends at spot `outcome()[i-1]`.
    pub fn outcome(&self) -> Permutation {
        let mut spots = vec![0; self.n()];
        let mut occupied = vec![false; self.n()];
        park(&self.prefs, &mut occupied, &mut spots);
        Permutation::from_word_unchecked(spots)
    }

    /// Whether the preferences themselves form a permutation.
    pub fn is_permutation(&self) -> bool {
        Permutation::new(self.prefs.clone()).is_ok()
    }
}

pub(crate) fn cosum(prefs: &[usize]) -> usize {
    let n = prefs.len();
    n * (n + 1) / 2 - prefs.iter().sum::<usize>()
}

pub(crate) fn excedances(prefs: &[usize]) -> usize {
    prefs
        .iter()
        .zip(1..)
        .filter(|&(&p, i)| p > i)
        .count()
}

/// Fills `spots[i] = spot of car i+1`. `occupied` must be all false and as
/// long as `prefs`.
pub(crate) fn park(prefs: &[usize], occupied: &mut [bool], spots: &mut [usize]) {
    for (car, &want) in prefs.iter().enumerate() {
        let mut spot = want - 1;
        while occupied[spot] {
            spot += 1;
        }
        occupied[spot] = true;
        spots[car] = spot + 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(prefs: &[usize]) -> ParkingFunction {
        ParkingFunction::new(prefs.to_vec()).unwrap()
    }

    /// Oracle: simulate the street directly and see whether every car parks.
    fn all_cars_park(prefs: &[i64]) -> bool {
        let n = prefs.len();
        let mut street = vec![false; n];
        prefs.iter().all(|&p| {
            if p < 1 {
                return false;
            }
            match (p as usize - 1..n).find(|&s| !street[s]) {
                Some(s) => {
                    street[s] = true;
                    true
                }
                None => false,
            }
        })
    }

    #[test]
    fn recognition_examples() {
        assert!(is_parking_function(&[2, 2, 1, 3]));
        assert!(is_parking_function(&[1, 1, 1, 1, 1]));
        assert!(!is_parking_function(&[2, 3, 3]));
        assert!(!is_parking_function(&[0, 1]));
        assert!(!is_parking_function(&[1, 3]));
        assert!(ParkingFunction::new(vec![2, 3, 3]).is_err());
    }

    #[test]
    fn recognition_matches_simulation() {
        for n in 1..=4usize {
            let total = (n + 2).pow(n as u32);
            for mut idx in 0..total {
                let seq: Vec<i64> = (0..n)
                    .map(|_| {
                        let v = (idx % (n + 2)) as i64 - 1;
                        idx /= n + 2;
                        v
                    })
                    .collect();
                assert_eq!(is_parking_function(&seq), all_cars_park(&seq), "{seq:?}");
            }
        }
    }

    #[test]
    fn cosum_examples() {
        assert_eq!(pf(&[1, 2, 3]).cosum(), 0);
        assert_eq!(pf(&[1, 1, 1]).cosum(), 3);
        assert_eq!(pf(&[2, 2, 1, 3]).cosum(), 2);
    }

    #[test]
    fn excedance_examples() {
        assert_eq!(pf(&[4, 2, 1, 3]).excedances(), 1);
        assert_eq!(pf(&[1, 1, 1, 1]).excedances(), 0);
        assert_eq!(pf(&[2, 2, 1, 3]).excedances(), 1);
    }

    #[test]
    fn outcome_examples() {
        let out = pf(&[2, 2, 1, 3]).outcome();
        assert_eq!(out.word(), &[2, 3, 1, 4]);
        assert_eq!(out.inverse().word(), &[3, 1, 2, 4]);
        let out = pf(&[4, 2, 1, 3]).outcome();
        assert_eq!(out.word(), &[4, 2, 1, 3]);
        assert_eq!(out.descents(), 2);
        assert_eq!(pf(&[1, 1, 1, 1]).outcome(), Permutation::identity(4));
    }
}
