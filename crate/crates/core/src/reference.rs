//! Published Chern numbers of `A^[[n]]` for `2 ≤ n ≤ 8`.
//!
//! The table ships as `data/kummer_reference.csv` with columns
//! `n,partition_key,value`, one record per nonvanishing Chern number.

use std::collections::BTreeMap;
use std::io::Read;

use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::symfun::parse_chern_key;

/// Raw contents of the embedded reference table.
pub const REFERENCE_CSV: &str = include_str!("../data/kummer_reference.csv");

/// Number of records per `n` in the embedded table.
pub const ENTRIES_PER_N: [(usize, usize); 7] = [(2, 1), (3, 2), (4, 3), (5, 5), (6, 7), (7, 11), (8, 15)];

#[derive(Debug, Deserialize)]
struct Record {
    n: usize,
    partition_key: String,
    value: String,
}

/// Reference Chern numbers keyed by `(n, μ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    entries: BTreeMap<(usize, Partition), BigInt>,
}

impl ReferenceTable {
    /// The table embedded in the crate.
    pub fn embedded() -> Self {
        Self::from_reader(REFERENCE_CSV.as_bytes()).expect("embedded reference table is well formed")
    }

    pub fn from_reader(reader: impl Read) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (line, record) in csv::Reader::from_reader(reader).deserialize::<Record>().enumerate() {
            let record = record.map_err(|e| Error::Reference(e.to_string()))?;
            let mu = parse_chern_key(&record.partition_key)?;
            if mu.size() != 2 * record.n.saturating_sub(1) {
                return Err(Error::Reference(format!(
                    "record {}: {} is not a partition of {}",
                    line + 1,
                    record.partition_key,
                    2 * record.n.saturating_sub(1)
                )));
            }
            let value: BigInt = record
                .value
                .trim()
                .parse()
                .map_err(|_| Error::Reference(format!("record {}: bad value `{}`", line + 1, record.value)))?;
            if entries.insert((record.n, mu), value).is_some() {
                return Err(Error::Reference(format!("record {}: duplicate key", line + 1)));
            }
        }
        Ok(Self { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, n: usize, mu: &Partition) -> Option<&BigInt> {
        self.entries.get(&(n, mu.clone()))
    }

    /// Records with `n ≤ n_max`, ordered by `n` then partition.
    pub fn up_to(&self, n_max: usize) -> impl Iterator<Item = (usize, &Partition, &BigInt)> {
        self.entries.iter().filter(move |((n, _), _)| *n <= n_max).map(|((n, mu), v)| (*n, mu, v))
    }

    pub fn max_n(&self) -> usize {
        self.entries.keys().map(|(n, _)| *n).max().unwrap_or(0)
    }
}
