//! Named families of labeled cube subgraphs: hypercubes, Fibonacci and Lucas
//! cubes, generalized Fibonacci cubes `Q_n[f]` and vertex-deleted cubes.
//!
//! Every builder has a `*_with` variant taking explicit [`Limits`]; the plain
//! version uses the defaults.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{CubeSubgraph, Limits};
use crate::label::{check_dim, dim_mask, VertexLabel};

/// `F_k` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci_number(k: u32) -> Result<u64> {
    if k == 0 {
        return Ok(0);
    }
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 1..k {
        let next = a
            .checked_add(b)
            .ok_or(Error::Overflow("fibonacci_number"))?;
        a = b;
        b = next;
    }
    Ok(b)
}

pub fn hypercube(n: u32) -> Result<CubeSubgraph> {
    hypercube_with(n, &Limits::default())
}

pub fn hypercube_with(n: u32, limits: &Limits) -> Result<CubeSubgraph> {
    check_dim(n)?;
    let count = full_cube_size(n, limits)?;
    Ok(CubeSubgraph::from_sorted_unchecked(
        n,
        (0..count as u64).collect(),
    ))
}

fn full_cube_size(n: u32, limits: &Limits) -> Result<usize> {
    let count = 1usize.checked_shl(n).ok_or(Error::SizeLimit {
        limit: limits.max_vertices,
    })?;
    limits.check(count)?;
    Ok(count)
}

/// `Γ_n`: strings with no two consecutive 1s.
pub fn fibonacci_cube(n: u32) -> Result<CubeSubgraph> {
    fibonacci_cube_with(n, &Limits::default())
}

pub fn fibonacci_cube_with(n: u32, limits: &Limits) -> Result<CubeSubgraph> {
    let eleven = VertexLabel::from_raw(0b11, 2);
    avoiding(n, eleven, limits, |_| true)
}

/// `Λ_n`: Fibonacci strings whose first and last coordinates are not both 1.
///
/// `Λ_1` is `K_1` by convention, even though the string `1` has no forbidden pair.
pub fn lucas_cube(n: u32) -> Result<CubeSubgraph> {
    lucas_cube_with(n, &Limits::default())
}

pub fn lucas_cube_with(n: u32, limits: &Limits) -> Result<CubeSubgraph> {
    check_dim(n)?;
    if n <= 1 {
        return Ok(CubeSubgraph::from_sorted_unchecked(n, vec![0]));
    }
    let eleven = VertexLabel::from_raw(0b11, 2);
    let first_and_last = 1u64 | 1 << (n - 1);
    avoiding(n, eleven, limits, |u| u & first_and_last != first_and_last)
}

/// `Q_n[f]`: strings that do not contain `f` as a contiguous substring.
///
/// A pattern longer than `n` excludes nothing. The result is a daisy cube
/// when `f = 1^s`; other patterns give arbitrary induced subgraphs.
pub fn generalized_fibonacci_cube(n: u32, pattern: VertexLabel) -> Result<CubeSubgraph> {
    generalized_fibonacci_cube_with(n, pattern, &Limits::default())
}

pub fn generalized_fibonacci_cube_with(
    n: u32,
    pattern: VertexLabel,
    limits: &Limits,
) -> Result<CubeSubgraph> {
    if pattern.dim() == 0 {
        return Err(Error::InvalidArgument(
            "forbidden pattern must be nonempty".into(),
        ));
    }
    avoiding(n, pattern, limits, |_| true)
}

/// `Q_n` minus `1^n`.
pub fn vertex_deleted_cube(n: u32) -> Result<CubeSubgraph> {
    vertex_deleted_cube_with(n, &Limits::default())
}

pub fn vertex_deleted_cube_with(n: u32, limits: &Limits) -> Result<CubeSubgraph> {
    check_dim(n)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "vertex-deleted cube needs dimension at least 1".into(),
        ));
    }
    let count = full_cube_size(
        n,
        &Limits::with_max_vertices(limits.max_vertices.saturating_add(1)),
    )?;
    let top = dim_mask(n);
    Ok(CubeSubgraph::from_sorted_unchecked(
        n,
        (0..count as u64).filter(|&u| u != top).collect(),
    ))
}

/// Enumerates the length-`n` strings avoiding `pattern` that also satisfy `keep`.
///
/// Strings are grown one coordinate at a time while a KMP automaton tracks the
/// longest pattern prefix matched so far, so only viable prefixes are visited.
fn avoiding(
    n: u32,
    pattern: VertexLabel,
    limits: &Limits,
    keep: impl Fn(u64) -> bool,
) -> Result<CubeSubgraph> {
    check_dim(n)?;
    let automaton = MatchAutomaton::new(pattern);
    let mut out = Vec::new();
    // (prefix bits, prefix length, automaton state)
    let mut stack = vec![(0u64, 0u32, 0usize)];
    while let Some((bits, len, state)) = stack.pop() {
        if len == n {
            if keep(bits) {
                out.push(bits);
                limits.check(out.len())?;
            }
            continue;
        }
        for c in [1u64, 0] {
            let next = automaton.step(state, c == 1);
            if next < automaton.len() {
                stack.push((bits | c << len, len + 1, next));
            }
        }
    }
    out.sort_unstable();
    Ok(CubeSubgraph::from_sorted_unchecked(n, out))
}

struct MatchAutomaton {
    // delta[state][bit], states 0..=len
    delta: Vec<[usize; 2]>,
}

impl MatchAutomaton {
    fn new(pattern: VertexLabel) -> Self {
        let k = pattern.dim() as usize;
        let p: Vec<bool> = (0..k as u32).map(|i| pattern.coord(i)).collect();
        let mut delta = vec![[0usize; 2]; k + 1];
        if k == 0 {
            return Self { delta };
        }
        delta[0][p[0] as usize] = 1;
        // `restart` is the state reached by the longest proper border of p[..j]
        let mut restart = 0;
        for j in 1..=k {
            let fallback = delta[restart];
            delta[j] = [0, 1].map(|c| {
                if j < k && p[j] as usize == c {
                    j + 1
                } else {
                    fallback[c]
                }
            });
            if j < k {
                restart = delta[restart][p[j] as usize];
            }
        }
        Self { delta }
    }

    fn len(&self) -> usize {
        self.delta.len() - 1
    }

    fn step(&self, state: usize, bit: bool) -> usize {
        self.delta[state][bit as usize]
    }
}

/// The graph families the CLI and FFI can name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hypercube,
    Fibonacci,
    Lucas,
    /// `Q_n[f]`, needs a pattern.
    Qnf,
    VertexDeleted,
    /// Closure of a generator set, needs generators.
    Daisy,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Hypercube,
        Family::Fibonacci,
        Family::Lucas,
        Family::Qnf,
        Family::VertexDeleted,
        Family::Daisy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hypercube => "hypercube",
            Family::Fibonacci => "fibonacci",
            Family::Lucas => "lucas",
            Family::Qnf => "qnf",
            Family::VertexDeleted => "vertex-deleted",
            Family::Daisy => "daisy",
        }
    }

    /// Builds the member of dimension `n` for families determined by `n` (and
    /// `pattern` for [`Family::Qnf`]). [`Family::Daisy`] needs generators and is
    /// rejected here.
    pub fn build(
        self,
        n: u32,
        pattern: Option<VertexLabel>,
        limits: &Limits,
    ) -> Result<CubeSubgraph> {
        match self {
            Family::Hypercube => hypercube_with(n, limits),
            Family::Fibonacci => fibonacci_cube_with(n, limits),
            Family::Lucas => lucas_cube_with(n, limits),
            Family::VertexDeleted => vertex_deleted_cube_with(n, limits),
            Family::Qnf => {
                let f = pattern.ok_or_else(|| {
                    Error::InvalidArgument("family qnf requires a pattern".into())
                })?;
                generalized_fibonacci_cube_with(n, f, limits)
            }
            Family::Daisy => Err(Error::InvalidArgument(
                "family daisy is built from a generator set".into(),
            )),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(g: &CubeSubgraph) -> Vec<String> {
        g.label_strings()
    }

    fn pat(s: &str) -> VertexLabel {
        VertexLabel::parse(s).unwrap()
    }

    // brute force: scan all 2^n strings for the substring
    fn avoiding_by_scan(n: u32, f: &str) -> Vec<u64> {
        (0..1u64 << n)
            .filter(|&u| !crate::label::format_bits(u, n).contains(f))
            .collect()
    }

    #[test]
    fn hypercube_sizes() {
        assert_eq!(strings(&hypercube(0).unwrap()), vec![""]);
        assert_eq!(
            strings(&hypercube(2).unwrap()),
            vec!["00", "10", "01", "11"]
        );
        assert_eq!(hypercube(10).unwrap().vertex_count(), 1024);
        assert_eq!(hypercube(20).unwrap().vertex_count(), 1 << 20);
        assert!(matches!(hypercube(21), Err(Error::SizeLimit { .. })));
        assert!(matches!(hypercube(64), Err(Error::SizeLimit { .. })));
        assert!(matches!(
            hypercube(65),
            Err(Error::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn fibonacci_cube_small() {
        let g = fibonacci_cube(3).unwrap();
        let mut s = strings(&g);
        s.sort();
        assert_eq!(s, vec!["000", "001", "010", "100", "101"]);
        assert_eq!(strings(&fibonacci_cube(0).unwrap()), vec![""]);
        assert_eq!(fibonacci_cube(10).unwrap().vertex_count(), 144);
    }

    #[test]
    fn lucas_cube_small() {
        let mut s = strings(&lucas_cube(3).unwrap());
        s.sort();
        assert_eq!(s, vec!["000", "001", "010", "100"]);
        assert_eq!(strings(&lucas_cube(1).unwrap()), vec!["0"]);
        assert_eq!(strings(&lucas_cube(0).unwrap()), vec![""]);
        let mut s2 = strings(&lucas_cube(2).unwrap());
        s2.sort();
        assert_eq!(s2, vec!["00", "01", "10"]);
    }

    #[test]
    fn generalized_cubes() {
        assert_eq!(
            generalized_fibonacci_cube(3, pat("11")).unwrap(),
            fibonacci_cube(3).unwrap()
        );
        let g = generalized_fibonacci_cube(3, pat("111")).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert!(!g.contains(0b111));
        assert_eq!(
            generalized_fibonacci_cube(2, pat("111")).unwrap(),
            hypercube(2).unwrap()
        );
        assert!(generalized_fibonacci_cube(3, pat("")).is_err());
    }

    #[test]
    fn automaton_matches_substring_scan() {
        for f in [
            "0", "1", "01", "10", "11", "010", "0110", "101", "1101", "0000", "10010",
        ] {
            for n in 0..=11 {
                let g = generalized_fibonacci_cube(n, pat(f)).unwrap();
                assert_eq!(g.bits(), avoiding_by_scan(n, f).as_slice(), "f={f} n={n}");
            }
        }
    }

    #[test]
    fn vertex_deleted() {
        assert_eq!(vertex_deleted_cube(3).unwrap().vertex_count(), 7);
        assert_eq!(strings(&vertex_deleted_cube(1).unwrap()), vec!["0"]);
        assert_eq!(
            strings(&vertex_deleted_cube(2).unwrap()),
            vec!["00", "10", "01"]
        );
        assert!(vertex_deleted_cube(0).is_err());
        assert_eq!(
            vertex_deleted_cube(6).unwrap(),
            generalized_fibonacci_cube(6, VertexLabel::ones(6).unwrap()).unwrap()
        );
        // 2^20 - 1 fits the default cap
        assert!(vertex_deleted_cube(20).is_ok());
    }

    #[test]
    fn fibonacci_numbers() {
        assert_eq!(fibonacci_number(0).unwrap(), 0);
        assert_eq!(fibonacci_number(1).unwrap(), 1);
        assert_eq!(fibonacci_number(12).unwrap(), 144);
        assert_eq!(fibonacci_number(93).unwrap(), 12200160415121876738);
        assert!(matches!(fibonacci_number(94), Err(Error::Overflow(_))));
    }

    #[test]
    fn limits_are_enforced() {
        let tight = Limits::with_max_vertices(10);
        assert!(fibonacci_cube_with(4, &tight).is_ok()); // 8 vertices
        assert!(matches!(
            fibonacci_cube_with(5, &tight),
            Err(Error::SizeLimit { limit: 10 })
        ));
        assert!(hypercube_with(3, &tight).is_ok());
        assert!(hypercube_with(4, &tight).is_err());
        assert!(vertex_deleted_cube_with(4, &Limits::with_max_vertices(15)).is_ok());
        assert!(vertex_deleted_cube_with(4, &Limits::with_max_vertices(14)).is_err());
        // high dimension with a tiny output is fine
        assert_eq!(
            generalized_fibonacci_cube(64, pat("1"))
                .unwrap()
                .vertex_count(),
            1
        );
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("petersen".parse::<Family>().is_err());
        assert!(Family::Qnf.build(3, None, &Limits::default()).is_err());
        assert!(Family::Daisy.build(3, None, &Limits::default()).is_err());
    }
}
