//! The explicit divisor prime graph and brute-force index evaluation.
//!
//! Nothing here looks at exponent vectors: adjacency is decided by `gcd` on
//! the divisor values, distances come from a breadth-first search out of
//! every vertex, and each index is summed from its definition over unordered
//! vertex pairs, edges or vertices. That keeps this path independent of
//! [`crate::closed_form`].

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::arithmetic::{gcd, Factorization};
use crate::error::{Error, Result};
use crate::rational::ExactRational;
use crate::report::{IndexReport, Source};

// Below this many vertices per-source BFS runs sequentially.
const PARALLEL_BFS_MIN_VERTICES: usize = 256;

const UNREACHED: u32 = u32::MAX;

/// Dense symmetric bit matrix, one row of `u64` words per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    size: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn from_rows(size: usize, rows: Vec<Vec<u64>>) -> Self {
        let words = size.div_ceil(64);
        let bits = rows.into_iter().flatten().collect::<Vec<_>>();
        debug_assert_eq!(bits.len(), size * words);
        BitMatrix { size, words, bits }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.row(i)[j / 64] >> (j % 64) & 1 == 1
    }

    fn row_count(&self, i: usize) -> u64 {
        self.row(i).iter().map(|w| u64::from(w.count_ones())).sum()
    }
}

fn ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + bit)
        })
    })
}

/// `G_Dp(n)`: the divisors of `n`, two distinct divisors adjacent iff coprime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorGraph {
    n: BigUint,
    vertices: Vec<BigUint>,
    adjacency: BitMatrix,
}

/// All-pairs distance data of a [`DivisorGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceSummary {
    /// Distance to number of unordered pairs at that distance.
    pub pairs_at_distance: BTreeMap<u32, u64>,
    pub eccentricities: Vec<u32>,
    pub diameter: u32,
}

/// Builds the graph, refusing when `D` exceeds `cap`.
pub fn build_graph(f: &Factorization, cap: u64) -> Result<DivisorGraph> {
    DivisorGraph::build(f, cap)
}

impl DivisorGraph {
    pub fn build(f: &Factorization, cap: u64) -> Result<Self> {
        let vertices = f.divisors(cap)?;
        let size = vertices.len();
        let words = size.div_ceil(64);

        let narrow: Option<Vec<u64>> = vertices.iter().map(ToPrimitive::to_u64).collect();
        let coprime: Box<dyn Fn(usize, usize) -> bool + Sync> = match narrow {
            Some(small) => Box::new(move |i, j| small[i].gcd(&small[j]) == 1),
            None => {
                let wide = vertices.clone();
                Box::new(move |i, j| gcd(&wide[i], &wide[j]).is_one())
            }
        };
        let rows = (0..size)
            .into_par_iter()
            .map(|i| {
                let mut row = vec![0u64; words];
                for j in (0..size).filter(|&j| j != i) {
                    if coprime(i, j) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();

        Ok(DivisorGraph {
            n: f.n().clone(),
            vertices,
            adjacency: BitMatrix::from_rows(size, rows),
        })
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    /// Divisors of `n` in ascending order; vertex `i` is `vertices()[i]`.
    pub fn vertices(&self) -> &[BigUint] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Index of the vertex carrying divisor `d`.
    pub fn vertex_index(&self, d: &BigUint) -> Option<usize> {
        self.vertices.binary_search(d).ok()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency.get(i, j)
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |i| {
            ones(self.adjacency.row(i))
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    pub fn edge_count(&self) -> u64 {
        self.degrees().iter().sum::<u64>() / 2
    }

    pub fn degree_of(&self, index: usize) -> Result<u64> {
        if index >= self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                index,
                len: self.vertex_count(),
            });
        }
        Ok(self.adjacency.row_count(index))
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.vertex_count())
            .map(|i| self.adjacency.row_count(i))
            .collect()
    }

    /// Distances from `source` to every vertex by BFS.
    fn bfs(&self, source: usize) -> Vec<u32> {
        let words = self.adjacency.words;
        let mut dist = vec![UNREACHED; self.vertex_count()];
        dist[source] = 0;
        let mut visited = vec![0u64; words];
        visited[source / 64] |= 1 << (source % 64);
        let mut frontier = visited.clone();
        let mut level = 0;
        loop {
            level += 1;
            let mut next = vec![0u64; words];
            for v in ones(&frontier) {
                for (n, r) in next.iter_mut().zip(self.adjacency.row(v)) {
                    *n |= r;
                }
            }
            for (n, seen) in next.iter_mut().zip(&mut visited) {
                *n &= !*seen;
                *seen |= *n;
            }
            if next.iter().all(|&w| w == 0) {
                break;
            }
            for v in ones(&next) {
                dist[v] = level;
            }
            frontier = next;
        }
        dist
    }

    fn scan(&self) -> PairScan {
        let degrees = self.degrees();
        let per_source = |i: usize| PairScan::from_source(i, &self.bfs(i), &degrees);
        let size = self.vertex_count();
        let merged = if size >= PARALLEL_BFS_MIN_VERTICES {
            (0..size)
                .into_par_iter()
                .map(per_source)
                .reduce(PairScan::default, PairScan::merge)
        } else {
            (0..size)
                .map(per_source)
                .fold(PairScan::default(), PairScan::merge)
        };
        PairScan { degrees, ..merged }
    }

    /// Exact distance histogram and eccentricities from a BFS out of every
    /// vertex. Nothing is assumed about the diameter.
    pub fn distance_summary(&self) -> DistanceSummary {
        self.scan().summary()
    }

    /// Every index evaluated from its defining sum.
    pub fn oracle_report(&self) -> IndexReport {
        let scan = self.scan();
        let summary = scan.summary();
        let big = |v: u128| BigUint::from(v);

        let degree_sum: u128 = scan.degrees.iter().map(|&d| u128::from(d)).sum();
        let zagreb1: u128 = scan
            .degrees
            .iter()
            .map(|&d| u128::from(d) * u128::from(d))
            .sum();
        let eccentric: u128 = scan
            .degrees
            .iter()
            .zip(&summary.eccentricities)
            .map(|(&d, &e)| u128::from(d) * u128::from(e))
            .sum();
        let harary: ExactRational = summary
            .pairs_at_distance
            .iter()
            .map(|(&dist, &count)| ExactRational::new(count, dist))
            .sum();
        let edge_count = summary.pairs_at_distance.get(&1).copied().unwrap_or(0);
        assert!(scan.hyper_wiener_twice.is_multiple_of(2));

        IndexReport {
            n: self.n.clone(),
            divisor_count: BigUint::from(self.vertex_count()),
            edge_count: BigUint::from(edge_count),
            degree_sum: big(degree_sum),
            wiener: big(scan.wiener),
            harary,
            hyper_wiener: big(scan.hyper_wiener_twice / 2),
            zagreb1: big(zagreb1),
            zagreb2: big(scan.zagreb2),
            gutman: big(scan.gutman),
            schultz: big(scan.schultz),
            eccentric_connectivity: big(eccentric),
            diameter: Some(summary.diameter),
            source: Source::Oracle,
        }
    }
}

/// Sums over the unordered pairs `(i, j)`, `i < j`, credited to source `i`.
#[derive(Debug, Default)]
struct PairScan {
    histogram: Vec<u64>,
    eccentricities: Vec<(usize, u32)>,
    wiener: u128,
    hyper_wiener_twice: u128,
    zagreb2: u128,
    gutman: u128,
    schultz: u128,
    degrees: Vec<u64>,
}

impl PairScan {
    fn from_source(source: usize, dist: &[u32], degrees: &[u64]) -> Self {
        let mut scan = PairScan::default();
        let mut eccentricity = 0;
        for (j, &d) in dist.iter().enumerate() {
            assert!(d != UNREACHED, "divisor graph is disconnected");
            eccentricity = eccentricity.max(d);
            if j <= source {
                continue;
            }
            let (di, dj) = (u128::from(degrees[source]), u128::from(degrees[j]));
            let d = d as usize;
            if scan.histogram.len() <= d {
                scan.histogram.resize(d + 1, 0);
            }
            scan.histogram[d] += 1;
            let d = d as u128;
            scan.wiener += d;
            scan.hyper_wiener_twice += d + d * d;
            scan.gutman += di * dj * d;
            scan.schultz += (di + dj) * d;
            if d == 1 {
                scan.zagreb2 += di * dj;
            }
        }
        scan.eccentricities.push((source, eccentricity));
        scan
    }

    fn merge(mut self, other: Self) -> Self {
        if self.histogram.len() < other.histogram.len() {
            self.histogram.resize(other.histogram.len(), 0);
        }
        for (a, b) in self.histogram.iter_mut().zip(&other.histogram) {
            *a += b;
        }
        self.eccentricities.extend(other.eccentricities);
        self.wiener += other.wiener;
        self.hyper_wiener_twice += other.hyper_wiener_twice;
        self.zagreb2 += other.zagreb2;
        self.gutman += other.gutman;
        self.schultz += other.schultz;
        self
    }

    fn summary(&self) -> DistanceSummary {
        let mut eccentricities = vec![0; self.eccentricities.len()];
        for &(v, e) in &self.eccentricities {
            eccentricities[v] = e;
        }
        let pairs_at_distance = self
            .histogram
            .iter()
            .enumerate()
            .filter(|&(_, &count)| count > 0)
            .map(|(d, &count)| (d as u32, count))
            .collect();
        DistanceSummary {
            pairs_at_distance,
            diameter: eccentricities.iter().copied().max().unwrap_or(0),
            eccentricities,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form;
    use proptest::prelude::*;

    fn graph(n: u64) -> DivisorGraph {
        build_graph(&Factorization::from_u64(n).unwrap(), 10_000).unwrap()
    }

    fn index_of(g: &DivisorGraph, d: u64) -> usize {
        g.vertex_index(&BigUint::from(d)).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = graph(12);
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 7));
        let g = graph(1);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let g = graph(15);
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        let edge_values: Vec<_> = g
            .edges()
            .map(|(i, j)| {
                (
                    g.vertices()[i].to_u64().unwrap(),
                    g.vertices()[j].to_u64().unwrap(),
                )
            })
            .collect();
        assert_eq!(edge_values, [(1, 3), (1, 5), (1, 15), (3, 5)]);
    }

    #[test]
    fn build_refuses_over_cap() {
        let f = Factorization::from_u64(1 << 60).unwrap();
        let err = build_graph(&f, 16).unwrap_err();
        assert_eq!(
            err.to_string(),
            "divisor count 61 exceeds the oracle cap of 16"
        );
    }

    #[test]
    fn no_self_loops_and_centre_is_universal() {
        let g = graph(360);
        for i in 0..g.vertex_count() {
            assert!(!g.is_adjacent(i, i));
            assert_eq!(g.is_adjacent(0, i), i != 0);
        }
    }

    #[test]
    fn degree_examples() {
        let g = graph(20);
        assert_eq!(g.degree_of(index_of(&g, 1)).unwrap(), 5);
        assert_eq!(g.degree_of(index_of(&g, 5)).unwrap(), 3);
        assert_eq!(g.degree_of(index_of(&g, 10)).unwrap(), 1);
        let g = graph(1);
        assert_eq!(g.degree_of(index_of(&g, 1)).unwrap(), 0);
        assert_eq!(
            g.degree_of(1),
            Err(Error::VertexOutOfRange { index: 1, len: 1 })
        );
    }

    #[test]
    fn distance_summary_examples() {
        let s = graph(12).distance_summary();
        assert_eq!(s.pairs_at_distance, BTreeMap::from([(1, 7), (2, 8)]));
        assert_eq!(s.diameter, 2);

        let s = graph(1).distance_summary();
        assert!(s.pairs_at_distance.is_empty());
        assert_eq!((s.diameter, s.eccentricities.as_slice()), (0, &[0][..]));

        let s = graph(7).distance_summary();
        assert_eq!(s.pairs_at_distance, BTreeMap::from([(1, 1)]));
        assert_eq!(s.diameter, 1);
    }

    #[test]
    fn oracle_report_examples() {
        assert_eq!(graph(12).oracle_report().wiener, BigUint::from(23u32));
        let r = graph(30).oracle_report();
        assert_eq!(r.gutman, BigUint::from(361u32));
        assert_eq!(r.zagreb1, BigUint::from(110u32));
        assert_eq!(r.zagreb2, BigUint::from(205u32));
        assert_eq!(graph(45).oracle_report().schultz, BigUint::from(96u32));
        let r = graph(6).oracle_report();
        assert_eq!(r.harary, ExactRational::from_integer(5));
        assert_eq!(r.source, Source::Oracle);
    }

    #[test]
    fn oracle_reaches_beyond_u64_vertices() {
        let p = BigUint::from(18_446_744_073_709_551_557u64);
        let n = &p * &p * 6u32;
        let f = Factorization::of(&n).unwrap();
        let g = build_graph(&f, 100).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(
            g.oracle_report(),
            IndexReport {
                source: Source::Oracle,
                diameter: Some(2),
                ..closed_form::report(&f)
            }
        );
    }

    #[test]
    fn parallel_scan_matches_reference_values() {
        // 2^4 * 3^2 * 5^2 * 7 * 11 * 13, 360 divisors
        let f = Factorization::from_u64(3_603_600).unwrap();
        let g = build_graph(&f, 10_000).unwrap();
        assert!(g.vertex_count() >= PARALLEL_BFS_MIN_VERTICES);
        let oracle = g.oracle_report();
        assert_eq!(oracle.diameter, Some(2));
        assert_eq!(
            IndexReport {
                diameter: None,
                source: Source::ClosedForm,
                ..oracle
            },
            closed_form::report(&f)
        );
    }

    fn non_edge_sums(g: &DivisorGraph) -> (u128, u128) {
        let deg = g.degrees();
        let mut product = 0u128;
        let mut sum = 0u128;
        for i in 0..g.vertex_count() {
            for j in i + 1..g.vertex_count() {
                if !g.is_adjacent(i, j) {
                    product += u128::from(deg[i] * deg[j]);
                    sum += u128::from(deg[i] + deg[j]);
                }
            }
        }
        (product, sum)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn graph_invariants(n in 1u64..=50_000) {
            let f = Factorization::from_u64(n).unwrap();
            let g = build_graph(&f, 10_000).unwrap();
            let summary = g.distance_summary();
            let size = g.vertex_count() as u64;

            let expected_diameter = match size { 1 => 0, 2 => 1, _ => 2 };
            prop_assert_eq!(summary.diameter, expected_diameter);
            prop_assert_eq!(summary.pairs_at_distance.values().sum::<u64>(), size * (size - 1) / 2);
            prop_assert_eq!(summary.eccentricities.iter().copied().max().unwrap(), summary.diameter);

            let degrees = g.degrees();
            prop_assert_eq!(degrees.iter().sum::<u64>(), 2 * g.edge_count());
            if n >= 2 {
                prop_assert_eq!(degrees[0], size - 1);
            }
            let odd: u64 = f.exponents().map(|k| 2 * u64::from(k) + 1).product();
            prop_assert_eq!(g.edge_count(), (odd - 1) / 2);
            for (i, d) in g.vertices().iter().enumerate() {
                prop_assert_eq!(BigUint::from(degrees[i]), closed_form::degree(&f, d).unwrap());
            }

            let r = g.oracle_report();
            let dsum = &r.degree_sum;
            let d = BigUint::from(size);
            if n >= 2 {
                prop_assert_eq!(&r.gutman, &(dsum * dsum - &r.zagreb1 - &r.zagreb2));
                prop_assert_eq!(&r.schultz, &((&d - 1u32) * dsum * 2u32 - &r.zagreb1));
            }
            let lhs = ExactRational::from_integer(&r.wiener * 2u32)
                + ExactRational::new(r.harary.numerator() * 4, r.harary.denominator().clone());
            prop_assert_eq!(lhs, ExactRational::from_integer(&d * (&d - 1u32) * 3u32));

            let (product, sum) = non_edge_sums(&g);
            prop_assert_eq!(&r.gutman, &(&r.zagreb2 + BigUint::from(2 * product)));
            prop_assert_eq!(&r.schultz, &(&r.zagreb1 + BigUint::from(2 * sum)));
        }
    }
}
