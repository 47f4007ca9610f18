//! Integer partitions and vertical-strip combinatorics.
//!
//! A partition is a weakly decreasing list of positive integers; the empty
//! list is the empty partition.  Indexing past the stored parts reads 0, which
//! keeps strip tests and Pochhammer rows free of length bookkeeping.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its parts.
    ///
    /// Panics if the parts increase or contain 0; every internal construction
    /// site is ordered by construction, and user-facing input is validated
    /// before it reaches this point.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        assert!(!parts.contains(&0), "partition parts must be positive: {parts:?}");
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The column `1^len`.
    pub fn column(len: usize) -> Self {
        Self { parts: vec![1; len] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, 0-indexed; 0 beyond the stored length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// `(2k_1, 2k_2, ...)`.
    pub fn doubled(&self) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| 2 * p).collect(),
        }
    }

    /// `(k_1, k_1, k_2, k_2, ...)`.
    pub fn squared(&self) -> Partition {
        Partition {
            parts: self.parts.iter().flat_map(|&p| [p, p]).collect(),
        }
    }

    /// If every part is even, the partition with all parts halved.
    pub fn as_doubled(&self) -> Option<Partition> {
        self.parts
            .iter()
            .map(|&p| (p % 2 == 0).then_some(p / 2))
            .collect::<Option<Vec<_>>>()
            .map(|parts| Partition { parts })
    }

    /// If the parts pair up as `(k_1, k_1, k_2, k_2, ...)`, the partition with
    /// one copy of each pair.
    pub fn as_squared(&self) -> Option<Partition> {
        if self.parts.len() % 2 != 0 {
            return None;
        }
        let mut parts = Vec::with_capacity(self.parts.len() / 2);
        for pair in self.parts.chunks(2) {
            if pair[0] != pair[1] {
                return None;
            }
            parts.push(pair[0]);
        }
        Some(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions `lambda` with at most `max_rows` parts such that
/// `lambda/kappa` is a vertical strip of size `m`: `lambda_i - kappa_i` is 0
/// or 1 in every row and the increments sum to `m`.
pub fn vertical_strips(kappa: &Partition, m: usize, max_rows: usize) -> Vec<Partition> {
    if kappa.len() > max_rows {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut increments = vec![0u8; max_rows];
    collect_strips(kappa, m, max_rows, 0, &mut increments, &mut out);
    out.sort();
    out.reverse();
    out
}

fn collect_strips(
    kappa: &Partition,
    remaining: usize,
    max_rows: usize,
    row: usize,
    increments: &mut [u8],
    out: &mut Vec<Partition>,
) {
    if remaining > max_rows - row {
        return;
    }
    if row == max_rows {
        // Validate on the zero-padded vector: a box dropped below the profile
        // shows up as an increase and is rejected here.
        let mut parts: Vec<usize> = (0..max_rows)
            .map(|i| kappa.part(i) + increments[i] as usize)
            .collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.push(Partition { parts });
        return;
    }
    increments[row] = 0;
    collect_strips(kappa, remaining, max_rows, row + 1, increments, out);
    if remaining > 0 {
        increments[row] = 1;
        collect_strips(kappa, remaining - 1, max_rows, row + 1, increments, out);
        increments[row] = 0;
    }
}
