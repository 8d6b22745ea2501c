//! Induced subgraphs of `Q_n` given by their vertex labels.

use crate::error::{Error, Result};
use crate::label::{check_dim, dim_mask, format_bits, VertexLabel};

/// Default bound on the number of vertices any construction may enumerate.
pub const DEFAULT_MAX_VERTICES: usize = 1 << 20;

/// Resource bounds for graph construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl Limits {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Self { max_vertices }
    }

    pub(crate) fn check(&self, count: usize) -> Result<()> {
        if count > self.max_vertices {
            return Err(Error::SizeLimit {
                limit: self.max_vertices,
            });
        }
        Ok(())
    }
}

/// The subgraph of `Q_n` induced by a nonempty set of labels.
///
/// Vertices are kept strictly sorted by integer value; edges are the pairs at
/// Hamming distance one and are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubeSubgraph {
    n: u32,
    vertices: Vec<u64>,
}

impl CubeSubgraph {
    /// Validates and sorts `bits`. Duplicates are an error, not silently merged.
    pub fn from_bits(n: u32, mut bits: Vec<u64>) -> Result<Self> {
        check_dim(n)?;
        if bits.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mask = dim_mask(n);
        if let Some(&bad) = bits.iter().find(|&&b| b & !mask != 0) {
            return Err(Error::LabelOutOfRange { bits: bad, n });
        }
        bits.sort_unstable();
        if let Some(w) = bits.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex {
                label: format_bits(w[0], n),
            });
        }
        Ok(Self { n, vertices: bits })
    }

    pub fn from_labels(n: u32, labels: impl IntoIterator<Item = VertexLabel>) -> Result<Self> {
        check_dim(n)?;
        let mut bits = Vec::new();
        for label in labels {
            if label.dim() != n {
                return Err(Error::InvalidArgument(format!(
                    "label {label} has dimension {}, expected {n}",
                    label.dim()
                )));
            }
            bits.push(label.bits());
        }
        Self::from_bits(n, bits)
    }

    /// `bits` must already be strictly increasing, nonempty and within dimension `n`.
    pub(crate) fn from_sorted_unchecked(n: u32, bits: Vec<u64>) -> Self {
        debug_assert!(!bits.is_empty());
        debug_assert!(bits.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(bits.iter().all(|&b| b & !dim_mask(n) == 0));
        Self { n, vertices: bits }
    }

    #[inline]
    pub fn dim(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Sorted raw labels.
    #[inline]
    pub fn bits(&self) -> &[u64] {
        &self.vertices
    }

    pub fn labels(&self) -> impl ExactSizeIterator<Item = VertexLabel> + '_ {
        let n = self.n;
        self.vertices
            .iter()
            .map(move |&b| VertexLabel::from_raw(b, n))
    }

    pub fn index_of(&self, bits: u64) -> Option<usize> {
        self.vertices.binary_search(&bits).ok()
    }

    pub fn contains(&self, bits: u64) -> bool {
        self.index_of(bits).is_some()
    }

    /// Number of vertex pairs at Hamming distance one.
    pub fn edge_count(&self) -> u64 {
        let member = Membership::new(self);
        let mut count = 0u64;
        for &u in &self.vertices {
            let mut ones = u;
            while ones != 0 {
                let bit = ones & ones.wrapping_neg();
                ones ^= bit;
                if member.contains(u ^ bit) {
                    count += 1;
                }
            }
        }
        count
    }

    /// True iff clearing any 1-bit of any vertex gives another vertex, that is,
    /// the labeling is the downward closure of its maximal elements.
    pub fn is_downward_closed(&self) -> bool {
        self.closure_witness().is_none()
    }

    /// A vertex and a zero-based coordinate such that clearing that coordinate
    /// leaves the vertex set, or `None` if the labeling is downward closed.
    pub fn closure_witness(&self) -> Option<(VertexLabel, u32)> {
        let member = Membership::new(self);
        for &u in &self.vertices {
            let mut ones = u;
            while ones != 0 {
                let i = ones.trailing_zeros();
                ones &= ones - 1;
                if !member.contains(u ^ (1 << i)) {
                    return Some((VertexLabel::from_raw(u, self.n), i));
                }
            }
        }
        None
    }

    /// The labels as strings `u_1 ... u_n`, in stored order.
    pub fn label_strings(&self) -> Vec<String> {
        self.vertices
            .iter()
            .map(|&b| format_bits(b, self.n))
            .collect()
    }
}

/// Constant-time membership for small dimensions, binary search otherwise.
pub(crate) enum Membership<'a> {
    Dense(Vec<u64>),
    Sorted(&'a [u64]),
}

const DENSE_MAX_DIM: u32 = 24;

impl<'a> Membership<'a> {
    pub(crate) fn new(g: &'a CubeSubgraph) -> Self {
        if g.n <= DENSE_MAX_DIM {
            let mut words = vec![0u64; (1usize << g.n).div_ceil(64)];
            for &b in &g.vertices {
                words[(b >> 6) as usize] |= 1 << (b & 63);
            }
            Membership::Dense(words)
        } else {
            Membership::Sorted(&g.vertices)
        }
    }

    #[inline]
    pub(crate) fn contains(&self, bits: u64) -> bool {
        match self {
            Membership::Dense(words) => words[(bits >> 6) as usize] >> (bits & 63) & 1 == 1,
            Membership::Sorted(v) => v.binary_search(&bits).is_ok(),
        }
    }
}
