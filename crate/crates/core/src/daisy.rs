//! Daisy cubes: downward closures of generator sets in the componentwise order.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{CubeSubgraph, Limits};
use crate::label::{check_dim, VertexLabel};

/// A generator set `X` in `B^n` together with its maximal antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    n: u32,
    generators: Vec<VertexLabel>,
    maximal: Vec<VertexLabel>,
}

impl GeneratorSet {
    /// Deduplicates `generators`; rejects an empty set and mixed dimensions.
    pub fn new(n: u32, generators: impl IntoIterator<Item = VertexLabel>) -> Result<Self> {
        check_dim(n)?;
        let mut gens: Vec<VertexLabel> = generators.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if let Some(bad) = gens.iter().find(|g| g.dim() != n) {
            return Err(Error::InvalidArgument(format!(
                "generator {bad} has dimension {}, expected {n}",
                bad.dim()
            )));
        }
        gens.sort_unstable();
        gens.dedup();
        let maximal = maximal_antichain(&gens);
        Ok(Self {
            n,
            generators: gens,
            maximal,
        })
    }

    pub fn from_bits(n: u32, bits: impl IntoIterator<Item = u64>) -> Result<Self> {
        let labels = bits
            .into_iter()
            .map(|b| VertexLabel::new(b, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, labels)
    }

    pub fn dim(&self) -> u32 {
        self.n
    }

    /// Sorted, deduplicated generators.
    pub fn generators(&self) -> &[VertexLabel] {
        &self.generators
    }

    /// The maximal elements of the generators, sorted.
    pub fn maximal(&self) -> &[VertexLabel] {
        &self.maximal
    }

    /// Upper bound on the closure size: the sum of `2^weight` over maximal generators.
    pub fn closure_size_bound(&self) -> u128 {
        self.maximal.iter().map(|x| 1u128 << x.weight()).sum()
    }
}

/// Elements of `labels` that are not strictly below another element, sorted and deduplicated.
pub fn maximal_antichain(labels: &[VertexLabel]) -> Vec<VertexLabel> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted
        .iter()
        .filter(|&&x| !sorted.iter().any(|&y| y != x && x.is_below(y)))
        .copied()
        .collect()
}

/// `Q_n(X)`: every label below some generator.
pub fn daisy_closure(gens: &GeneratorSet) -> Result<CubeSubgraph> {
    daisy_closure_with(gens, &Limits::default())
}

/// Enumerates the sub-masks of each maximal generator. A single generator
/// whose interval alone exceeds the limit fails before any enumeration; the
/// union is checked as it grows.
pub fn daisy_closure_with(gens: &GeneratorSet, limits: &Limits) -> Result<CubeSubgraph> {
    for x in &gens.maximal {
        let size = 1u128 << x.weight();
        if size > limits.max_vertices as u128 {
            return Err(Error::SizeLimit {
                limit: limits.max_vertices,
            });
        }
    }

    let mut seen: HashSet<u64> = HashSet::new();
    for x in &gens.maximal {
        let top = x.bits();
        let mut sub = top;
        loop {
            seen.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & top;
        }
        limits.check(seen.len())?;
    }
    let mut bits: Vec<u64> = seen.into_iter().collect();
    bits.sort_unstable();
    Ok(CubeSubgraph::from_sorted_unchecked(gens.n, bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(xs: &[&str]) -> Vec<VertexLabel> {
        xs.iter().map(|s| VertexLabel::parse(s).unwrap()).collect()
    }

    fn gens(n: u32, xs: &[&str]) -> GeneratorSet {
        GeneratorSet::new(n, labels(xs)).unwrap()
    }

    #[test]
    fn closure_of_two_generators() {
        let g = daisy_closure(&gens(3, &["110", "011"])).unwrap();
        assert_eq!(
            g.label_strings(),
            vec!["000", "100", "010", "110", "001", "011"]
        );
    }

    #[test]
    fn closure_extremes() {
        let k1 = daisy_closure(&gens(3, &["000"])).unwrap();
        assert_eq!(k1.label_strings(), vec!["000"]);
        let q3 = daisy_closure(&gens(3, &["111"])).unwrap();
        assert_eq!(q3, crate::families::hypercube(3).unwrap());
        let eps = daisy_closure(&gens(0, &[""])).unwrap();
        assert_eq!(eps.vertex_count(), 1);
    }

    #[test]
    fn maximal_elements() {
        let mut got = maximal_antichain(&labels(&["110", "100", "011"]));
        got.sort_by_key(|l| l.to_string());
        assert_eq!(got, labels(&["011", "110"]));
        assert_eq!(maximal_antichain(&labels(&["101"])), labels(&["101"]));
        assert_eq!(maximal_antichain(&labels(&["001", "010", "100"])).len(), 3);
        assert_eq!(
            maximal_antichain(&labels(&["101", "101"])),
            labels(&["101"])
        );
        assert!(maximal_antichain(&[]).is_empty());
    }

    #[test]
    fn generator_set_validation() {
        assert_eq!(GeneratorSet::new(3, vec![]), Err(Error::EmptyGenerators));
        assert!(GeneratorSet::new(3, labels(&["10"])).is_err());
        assert!(GeneratorSet::from_bits(2, [4]).is_err());
        let g = gens(3, &["100", "110", "110"]);
        assert_eq!(g.generators().len(), 2);
        assert_eq!(g.maximal(), &labels(&["110"])[..]);
        assert_eq!(g.closure_size_bound(), 4);
    }

    #[test]
    fn size_limit() {
        let big = GeneratorSet::new(30, vec![VertexLabel::ones(30).unwrap()]).unwrap();
        assert!(matches!(daisy_closure(&big), Err(Error::SizeLimit { .. })));
        // two overlapping 3-cubes: bound 16, actual 12
        let two = gens(4, &["1110", "0111"]);
        assert_eq!(two.closure_size_bound(), 16);
        assert!(daisy_closure_with(&two, &Limits::with_max_vertices(12)).is_ok());
        assert!(daisy_closure_with(&two, &Limits::with_max_vertices(11)).is_err());
    }
}
