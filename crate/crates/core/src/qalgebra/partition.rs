use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntPartition {
    pub parts: Vec<u64>,
}

impl IntPartition {
    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn t(&self) -> usize {
        self.parts.len()
    }

    pub fn max_part(&self) -> u64 {
        self.parts.iter().copied().max().unwrap_or(0)
    }

    pub fn sum_squares(&self) -> u64 {
        self.parts.iter().map(|m| m * m).sum()
    }
}

/// Most balanced split of `n` into `t` non-negative parts, largest parts first.
pub fn minimal_partition(n: u64, t: usize) -> Result<IntPartition> {
    if t == 0 {
        return Err(Error::Argument("partition needs at least one part".into()));
    }
    let tt = t as u64;
    let parts = if n <= tt {
        (0..tt).map(|i| u64::from(i < n)).collect()
    } else {
        let (q, j) = (n / tt, n % tt);
        (0..tt).map(|i| if i < j { q + 1 } else { q }).collect()
    };
    Ok(IntPartition { parts })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(minimal_partition(2, 3).unwrap().parts, vec![1, 1, 0]);
        assert_eq!(minimal_partition(5, 3).unwrap().parts, vec![2, 2, 1]);
        assert_eq!(minimal_partition(12, 4).unwrap().parts, vec![3, 3, 3, 3]);
        assert!(minimal_partition(3, 0).is_err());
    }
}
