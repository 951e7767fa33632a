//! Finite partial bijections on a ground set `{1, …, n}`.
//!
//! These are the concrete models for monogenic inverse semigroups: finite
//! links, cycles, and their strongly disjoint unions. Equality is extensional
//! equality of the mapping, ground labels included.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An injective partial map on points `1..=ground`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialInjection {
    ground: usize,
    /// `map[k]` is the image of point `k + 1`, if any.
    map: Vec<Option<usize>>,
}

impl PartialInjection {
    /// The empty map on `ground` points.
    pub fn empty(ground: usize) -> Self {
        Self { ground, map: vec![None; ground] }
    }

    /// The identity on `ground` points.
    pub fn identity(ground: usize) -> Self {
        Self {
            ground,
            map: (1..=ground).map(Some).collect(),
        }
    }

    /// Builds a map from explicit arrows, validating bounds, functionality
    /// and injectivity.
    pub fn from_pairs(ground: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut map = vec![None; ground];
        let mut seen_targets = vec![false; ground];
        for &(src, dst) in pairs {
            if src == 0 || src > ground || dst == 0 || dst > ground {
                return Err(Error::InvalidArgument(format!(
                    "arrow {src}->{dst} leaves the ground set 1..={ground}"
                )));
            }
            if map[src - 1].is_some() {
                return Err(Error::InvalidArgument(format!("point {src} has two images")));
            }
            if seen_targets[dst - 1] {
                return Err(Error::InvalidArgument(format!("point {dst} has two preimages")));
            }
            map[src - 1] = Some(dst);
            seen_targets[dst - 1] = true;
        }
        Ok(Self { ground, map })
    }

    /// A finite link of length `r`: the chain `1 ↦ 2 ↦ … ↦ r` on `r` points
    /// (`r` points, `r - 1` arrows; `r = 1` is the empty map on one point).
    pub fn link(r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("a link needs at least one point".into()));
        }
        Ok(Self {
            ground: r,
            map: (0..r).map(|k| if k + 1 < r { Some(k + 2) } else { None }).collect(),
        })
    }

    /// A single cycle of order `s`: `1 → 2 → … → s → 1`.
    pub fn cycle(s: usize) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidArgument("a cycle needs at least one point".into()));
        }
        Ok(Self {
            ground: s,
            map: (0..s).map(|k| Some(if k + 1 < s { k + 2 } else { 1 })).collect(),
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    /// Image of a 1-based point.
    pub fn image(&self, point: usize) -> Option<usize> {
        self.map.get(point.checked_sub(1)?).copied().flatten()
    }

    /// Arrows `(source, target)` in source order.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(k, dst)| dst.map(|d| (k + 1, d)))
    }

    pub fn domain_size(&self) -> usize {
        self.map.iter().flatten().count()
    }

    pub fn is_empty_map(&self) -> bool {
        self.map.iter().all(Option::is_none)
    }

    /// Applies `self` first, then `other`. Errors on ground-size mismatch.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.ground != other.ground {
            return Err(Error::GroundSizeMismatch {
                left: self.ground,
                right: other.ground,
            });
        }
        Ok(Self {
            ground: self.ground,
            map: self
                .map
                .iter()
                .map(|dst| dst.and_then(|d| other.map[d - 1]))
                .collect(),
        })
    }

    /// The relational inverse (reverse every arrow).
    pub fn inverse(&self) -> Self {
        let mut map = vec![None; self.ground];
        for (src, dst) in self.arrows() {
            map[dst - 1] = Some(src);
        }
        Self { ground: self.ground, map }
    }

    /// `self` composed with itself `k` times; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::identity(self.ground);
        for _ in 0..k {
            acc = acc.compose(self).expect("same ground");
        }
        acc
    }

    /// Union after relabeling `other` onto fresh points above `self`'s
    /// ground set. The relabeling forces strong disjointness (domains and
    /// ranges pairwise disjoint), so no runtime check is needed.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let offset = self.ground;
        let mut map = self.map.clone();
        map.extend(other.map.iter().map(|dst| dst.map(|d| d + offset)));
        Self { ground: self.ground + other.ground, map }
    }

    /// Least `(r, s)` with `r, s ≥ 1` and `u^r = u^(r+s)`. Always terminates:
    /// there are finitely many partial maps on the ground set.
    pub fn index_period(&self) -> (usize, usize) {
        let mut seen: HashMap<PartialInjection, usize> = HashMap::new();
        let mut power = self.clone();
        let mut k = 1;
        loop {
            if let Some(&r) = seen.get(&power) {
                return (r, k - r);
            }
            seen.insert(power.clone(), k);
            power = power.compose(self).expect("same ground");
            k += 1;
        }
    }

    /// The smallest set containing `self` that is closed under composition
    /// and inversion, sorted canonically. If it would grow past `cap`, the
    /// partial set collected so far is returned inside the error.
    pub fn inverse_closure(&self, cap: usize) -> Result<Vec<PartialInjection>> {
        if cap == 0 {
            return Err(Error::InvalidArgument("closure cap must be at least 1".into()));
        }
        let mut set: BTreeSet<PartialInjection> = BTreeSet::new();
        set.insert(self.clone());
        let over_cap = |set: &BTreeSet<PartialInjection>| Error::ClosureCapExceeded {
            cap,
            partial: set.iter().cloned().collect(),
        };
        if set.len() > cap {
            return Err(over_cap(&set));
        }
        loop {
            let mut fresh: Vec<PartialInjection> = Vec::new();
            for f in &set {
                let inv = f.inverse();
                if !set.contains(&inv) {
                    fresh.push(inv);
                }
                for g in &set {
                    let fg = f.compose(g).expect("same ground");
                    if !set.contains(&fg) {
                        fresh.push(fg);
                    }
                }
            }
            if fresh.is_empty() {
                return Ok(set.into_iter().collect());
            }
            for elem in fresh {
                set.insert(elem);
                if set.len() > cap {
                    return Err(over_cap(&set));
                }
            }
        }
    }
}

impl fmt::Display for PartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.ground)?;
        let mut first = true;
        for (src, dst) in self.arrows() {
            if first {
                write!(f, " {src}->{dst}")?;
                first = false;
            } else {
                write!(f, ", {src}->{dst}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for PartialInjection {
    type Err = Error;

    /// Parses the `n; i->j, i->j, ...` form.
    fn from_str(s: &str) -> Result<Self> {
        let (ground_part, arrows_part) = s
            .split_once(';')
            .ok_or_else(|| Error::InvalidArgument(format!("missing ';' in injection '{s}'")))?;
        let ground: usize = ground_part
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad ground size '{}'", ground_part.trim())))?;
        let mut pairs = Vec::new();
        for chunk in arrows_part.split(',') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let (src, dst) = chunk
                .split_once("->")
                .ok_or_else(|| Error::InvalidArgument(format!("bad arrow '{chunk}'")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidArgument(format!("bad point '{}'", t.trim())))
            };
            pairs.push((parse(src)?, parse(dst)?));
        }
        Self::from_pairs(ground, &pairs)
    }
}

/// Isomorphism-type parameters for a monogenic inverse semigroup generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonogenicType {
    /// Type `(r, s)`: a finite link of length `r` together with a cycle of
    /// order `s`. Index `r`, period `s`.
    Periodic { index: usize, period: usize },
    /// Type `(r, Fwd)`: a finite link of length `r` together with a forward
    /// link. Only a truncation of the forward link can live on a finite
    /// ground set.
    ForwardTail { index: usize },
}

impl MonogenicType {
    /// The canonical generator of this type as a partial injection.
    ///
    /// For `Periodic`, index 0 gives the bare cycle (the group case); the
    /// truncation depth is ignored. For `ForwardTail` the forward link is
    /// replaced by a finite link on `truncation` points, which is faithful
    /// for all products of fewer than `truncation` factors (each factor
    /// moves points by at most one).
    pub fn generator(self, truncation: usize) -> Result<PartialInjection> {
        match self {
            MonogenicType::Periodic { index, period } => {
                let cycle = PartialInjection::cycle(period)?;
                if index == 0 {
                    Ok(cycle)
                } else {
                    Ok(PartialInjection::link(index)?.disjoint_union(&cycle))
                }
            }
            MonogenicType::ForwardTail { index } => {
                if truncation == 0 {
                    return Err(Error::InvalidArgument(
                        "forward-link truncation must be at least 1".into(),
                    ));
                }
                let tail = PartialInjection::link(truncation)?;
                if index == 0 {
                    Ok(tail)
                } else {
                    Ok(PartialInjection::link(index)?.disjoint_union(&tail))
                }
            }
        }
    }
}
