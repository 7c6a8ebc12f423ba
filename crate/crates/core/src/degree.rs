//! Degree classes and degree binning.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// Vertices grouped by degree. Degree-0 vertices are not indexed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeIndex {
    by_degree: BTreeMap<usize, Vec<usize>>,
}

impl DegreeIndex {
    pub fn new<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, d) in degrees.into_iter().enumerate() {
            if d > 0 {
                by_degree.entry(d).or_default().push(v);
            }
        }
        DegreeIndex { by_degree }
    }

    /// `V_d`; empty when no vertex has degree `d`.
    pub fn vertices(&self, d: usize) -> &[usize] {
        self.by_degree.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `n_d`.
    pub fn count(&self, d: usize) -> usize {
        self.vertices(d).len()
    }

    /// Degrees that occur, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.by_degree.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[usize])> + '_ {
        self.by_degree.iter().map(|(&d, vs)| (d, vs.as_slice()))
    }
}

/// Half-open degree range `(lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DegreeBin {
    pub lo: usize,
    pub hi: usize,
}

impl DegreeBin {
    pub fn contains(&self, d: usize) -> bool {
        self.lo < d && d <= self.hi
    }
}

impl fmt::Display for DegreeBin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo, self.hi)
    }
}

/// How to bin degrees for the degree-wise estimators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum BinSpec {
    /// `(2^{i-1}, 2^i]` for `i = 1, 2, ...`
    #[default]
    Logarithmic,
    /// One bin per occurring degree.
    PerDegree,
    /// Explicit ascending upper bounds; the first bin starts above 1.
    Bounds(Vec<usize>),
}

impl FromStr for BinSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "log" => Ok(BinSpec::Logarithmic),
            "none" => Ok(BinSpec::PerDegree),
            list => {
                let bounds = list
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| {
                        Error::InvalidArgument(format!(
                            "bin spec must be `log`, `none` or comma-separated upper bounds, got `{s}`"
                        ))
                    })?;
                if bounds.is_empty() || bounds[0] < 2 || bounds.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::InvalidArgument(format!(
                        "bin upper bounds must be strictly ascending and at least 2, got `{s}`"
                    )));
                }
                Ok(BinSpec::Bounds(bounds))
            }
        }
    }
}

/// Ordered, disjoint degree bins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBinning {
    bins: Vec<DegreeBin>,
}

impl DegreeBinning {
    /// Bins covering degrees `2..=max_degree`. Degrees below 2 carry no
    /// wedges and are never binned.
    pub fn new(spec: &BinSpec, index: &DegreeIndex) -> Self {
        let max_degree = index.degrees().last().unwrap_or(0);
        let bins = match spec {
            BinSpec::Logarithmic => {
                let mut bins = Vec::new();
                let mut hi = 2usize;
                while hi / 2 < max_degree {
                    bins.push(DegreeBin { lo: hi / 2, hi });
                    hi *= 2;
                }
                bins
            }
            BinSpec::PerDegree => index
                .degrees()
                .filter(|&d| d >= 2)
                .map(|d| DegreeBin { lo: d - 1, hi: d })
                .collect(),
            BinSpec::Bounds(bounds) => {
                let mut lo = 1;
                let mut bins = Vec::new();
                for &hi in bounds {
                    bins.push(DegreeBin { lo, hi });
                    lo = hi;
                }
                bins
            }
        };
        DegreeBinning { bins }
    }

    pub fn from_bins(bins: Vec<DegreeBin>) -> Result<Self, Error> {
        let valid = bins.iter().all(|b| b.lo >= 1 && b.lo < b.hi) && bins.windows(2).all(|w| w[0].hi <= w[1].lo);
        if !valid {
            return Err(Error::InvalidArgument(
                "bins must be non-empty, ordered, disjoint, and start above degree 1".into(),
            ));
        }
        Ok(DegreeBinning { bins })
    }

    pub fn bins(&self) -> &[DegreeBin] {
        &self.bins
    }

    /// Vertices whose degree falls in `bin`, ascending by vertex id.
    pub fn members(bin: DegreeBin, index: &DegreeIndex) -> Vec<usize> {
        let mut out: Vec<usize> = index
            .iter()
            .filter(|(d, _)| bin.contains(*d))
            .flat_map(|(_, vs)| vs.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_groups_by_degree() {
        let index = DegreeIndex::new([2, 0, 3, 2, 5]);
        assert_eq!(index.vertices(2), &[0, 3]);
        assert_eq!(index.count(3), 1);
        assert_eq!(index.count(0), 0);
        assert_eq!(index.degrees().collect::<Vec<_>>(), vec![2, 3, 5]);
    }

    #[test]
    fn log_bins_cover_max_degree() {
        let index = DegreeIndex::new([2, 2, 3, 5, 2, 2, 2]);
        let binning = DegreeBinning::new(&BinSpec::Logarithmic, &index);
        let bins: Vec<_> = binning.bins().iter().map(|b| (b.lo, b.hi)).collect();
        assert_eq!(bins, vec![(1, 2), (2, 4), (4, 8)]);
    }

    #[test]
    fn log_bins_exact_power_of_two() {
        let index = DegreeIndex::new([4, 1]);
        let binning = DegreeBinning::new(&BinSpec::Logarithmic, &index);
        assert_eq!(binning.bins().last(), Some(&DegreeBin { lo: 2, hi: 4 }));
    }

    #[test]
    fn per_degree_skips_low_degrees() {
        let index = DegreeIndex::new([1, 2, 7]);
        let binning = DegreeBinning::new(&BinSpec::PerDegree, &index);
        assert_eq!(
            binning.bins(),
            &[DegreeBin { lo: 1, hi: 2 }, DegreeBin { lo: 6, hi: 7 }]
        );
    }

    #[test]
    fn parse_specs() {
        assert_eq!("log".parse::<BinSpec>().unwrap(), BinSpec::Logarithmic);
        assert_eq!("none".parse::<BinSpec>().unwrap(), BinSpec::PerDegree);
        assert_eq!("2, 4,10".parse::<BinSpec>().unwrap(), BinSpec::Bounds(vec![2, 4, 10]));
        assert!("4,2".parse::<BinSpec>().is_err());
        assert!("1,2".parse::<BinSpec>().is_err());
        assert!("abc".parse::<BinSpec>().is_err());
        assert!("".parse::<BinSpec>().is_err());
    }

    #[test]
    fn explicit_bounds_make_adjacent_bins() {
        let index = DegreeIndex::new([2, 3]);
        let binning = DegreeBinning::new(&BinSpec::Bounds(vec![2, 4, 8]), &index);
        assert_eq!(
            binning.bins(),
            &[
                DegreeBin { lo: 1, hi: 2 },
                DegreeBin { lo: 2, hi: 4 },
                DegreeBin { lo: 4, hi: 8 }
            ]
        );
    }

    #[test]
    fn members_collects_bin() {
        let index = DegreeIndex::new([2, 2, 3, 5, 2, 2, 2]);
        let members = DegreeBinning::members(DegreeBin { lo: 2, hi: 4 }, &index);
        assert_eq!(members, vec![2]);
    }

    #[test]
    fn from_bins_rejects_overlap() {
        assert!(DegreeBinning::from_bins(vec![DegreeBin { lo: 1, hi: 4 }, DegreeBin { lo: 3, hi: 6 }]).is_err());
        assert!(DegreeBinning::from_bins(vec![DegreeBin { lo: 0, hi: 4 }]).is_err());
    }
}
