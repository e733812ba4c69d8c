use std::ops::Sub;

use crate::error::{Error, Result};

/// Consecutive differences `s[i+1] - s[i]`; empty for fewer than two terms.
pub fn difs<T>(s: &[T]) -> Vec<T>
where
    T: Clone + Sub<Output = T>,
{
    s.windows(2).map(|w| w[1].clone() - w[0].clone()).collect()
}

fn is_constant<T: PartialEq>(s: &[T]) -> bool {
    s.windows(2).all(|w| w[0] == w[1])
}

/// Number of `difs` passes until a constant run of at least two terms
/// appears; `None` if the data runs out first.
pub fn degree_by_differences<T>(s: &[T]) -> Result<Option<usize>>
where
    T: Clone + PartialEq + Sub<Output = T>,
{
    if s.len() < 2 {
        return Err(Error::InsufficientData);
    }
    let mut current = s.to_vec();
    let mut passes = 0;
    while current.len() >= 2 {
        if is_constant(&current) {
            return Ok(Some(passes));
        }
        current = difs(&current);
        passes += 1;
    }
    Ok(None)
}
