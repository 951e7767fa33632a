//! Finite semigroups given by their multiplication table.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A finite semigroup: named elements and a total multiplication table.
/// Associativity is checked exhaustively on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    names: Vec<String>,
    /// `table[a][b]` is the index of the product of elements `a` and `b`.
    table: Vec<Vec<usize>>,
}

impl FiniteSemigroup {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidArgument("a semigroup needs at least one element".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate element name '{name}'")));
            }
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(format!(
                "multiplication table must be {n}x{n}"
            )));
        }
        if let Some(&bad) = table.iter().flatten().find(|&&e| e >= n) {
            return Err(Error::InvalidArgument(format!(
                "table entry {bad} is out of range for {n} elements"
            )));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidArgument(format!(
                            "table is not associative at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(Self { names, table })
    }

    /// Tabulates a semigroup from a closed set of elements and their
    /// multiplication. Element `k` is named `e{k}`.
    pub fn from_elements<T, F>(elements: &[T], mul: F) -> Result<Self>
    where
        T: Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(k, e)| (e, k)).collect();
        let mut table = vec![vec![0usize; elements.len()]; elements.len()];
        for (a, ea) in elements.iter().enumerate() {
            for (b, eb) in elements.iter().enumerate() {
                let prod = mul(ea, eb);
                table[a][b] = *index.get(&prod).ok_or_else(|| {
                    Error::InvalidArgument("element set is not closed under multiplication".into())
                })?;
            }
        }
        let names = (0..elements.len()).map(|k| format!("e{k}")).collect();
        Self::new(names, table)
    }

    /// The cyclic group of order `n`, with elements `e, g, g^2, …`.
    pub fn cyclic_group(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("a group needs at least one element".into()));
        }
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(names, table)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}
