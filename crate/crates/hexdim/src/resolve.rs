//! Resolvability codes and certified minimum-dimension search.
//!
//! Four variants are supported: vertex metric (distinguish vertex pairs by
//! ordered distance vectors), edge metric (edge pairs), mixed metric (every
//! pair of distinct elements of V ∪ E, vertex-edge pairs included), and
//! multiset (vertex pairs by *sorted* distance tuples).
//!
//! [`min_dimension`] enumerates landmark subsets in lexicographic order, size
//! by size, and returns the first resolving subset, so the reported value is
//! the true minimum and every smaller subset has been refuted along the way.
//! Enumeration may be split across threads by contiguous rank ranges; the
//! witness and statistics are identical to the single-threaded scan.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{all_pairs_distances, DistanceMatrix, Edge, GraphError, LabeledGraph, VertexId};
use crate::subsets::{binomial, combination_at_rank, next_combination};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    VertexMetric,
    EdgeMetric,
    MixedMetric,
    Multiset,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::VertexMetric,
        Variant::EdgeMetric,
        Variant::MixedMetric,
        Variant::Multiset,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::VertexMetric => "vertex",
            Variant::EdgeMetric => "edge",
            Variant::MixedMetric => "mixed",
            Variant::Multiset => "multiset",
        }
    }

    fn includes_vertices(self) -> bool {
        !matches!(self, Variant::EdgeMetric)
    }

    fn includes_edges(self) -> bool {
        matches!(self, Variant::EdgeMetric | Variant::MixedMetric)
    }

    fn sorted_codes(self) -> bool {
        matches!(self, Variant::Multiset)
    }
}

/// An element of the comparison domain: a vertex or an edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Element {
    Vertex(VertexId),
    Edge(Edge),
}

impl Element {
    pub fn describe(&self, g: &LabeledGraph) -> String {
        match *self {
            Element::Vertex(v) => g.describe_vertex(v),
            Element::Edge(e) => g.describe_edge(e),
        }
    }
}

/// Ordered distance vector of `element` relative to `landmarks`; edge
/// elements use the vertex-edge distance (minimum over the two endpoints).
pub fn code(dm: &DistanceMatrix, element: Element, landmarks: &[VertexId]) -> Vec<u32> {
    assert!(!landmarks.is_empty(), "landmark list must be nonempty");
    landmarks
        .iter()
        .map(|&z| match element {
            Element::Vertex(v) => dm.get(z, v),
            Element::Edge(e) => dm.vertex_edge(z, e),
        })
        .collect()
}

/// Sorted distance multiset of a vertex relative to `landmarks`. Landmark
/// vertices are part of the domain; their representation contains a 0.
pub fn multiset_rep(dm: &DistanceMatrix, v: VertexId, landmarks: &[VertexId]) -> Vec<u32> {
    let mut rep = code(dm, Element::Vertex(v), landmarks);
    rep.sort_unstable();
    rep
}

/// Comparison domain of a variant, in canonical order: vertices by id, then
/// edges lexicographically. Every element is stored as an endpoint pair; a
/// vertex repeats its own id, so one distance rule serves both kinds.
fn element_table(g: &LabeledGraph, variant: Variant) -> (Vec<(u32, u32)>, Vec<Element>) {
    let mut pairs = Vec::new();
    let mut elements = Vec::new();
    if variant.includes_vertices() {
        for v in 0..g.vertex_count() {
            pairs.push((v as u32, v as u32));
            elements.push(Element::Vertex(v));
        }
    }
    if variant.includes_edges() {
        for e in g.edges() {
            pairs.push((e.u() as u32, e.v() as u32));
            elements.push(Element::Edge(e));
        }
    }
    (pairs, elements)
}

#[derive(Clone, Debug)]
pub struct ResolutionCheck {
    pub resolving: bool,
    /// Lexicographically first violating pair under the canonical element
    /// order, when not resolving.
    pub violation: Option<(Element, Element)>,
}

/// Decides whether `landmarks` resolve the graph under `variant` by grouping
/// elements on their code key.
pub fn is_resolving(
    g: &LabeledGraph,
    dm: &DistanceMatrix,
    landmarks: &[VertexId],
    variant: Variant,
) -> ResolutionCheck {
    assert!(!landmarks.is_empty(), "landmark list must be nonempty");
    let (pairs, elements) = element_table(g, variant);
    let sorted = variant.sorted_codes();

    let mut keyed: Vec<(Vec<u32>, u32)> = Vec::with_capacity(pairs.len());
    for (rank, &(x, y)) in pairs.iter().enumerate() {
        let mut key: Vec<u32> = landmarks
            .iter()
            .map(|&z| dm.get(z, x as usize).min(dm.get(z, y as usize)))
            .collect();
        if sorted {
            key.sort_unstable();
        }
        keyed.push((key, rank as u32));
    }
    keyed.sort_unstable();

    // ranks ascend inside each key group, so the group's candidate pair is
    // its first two entries; the answer is the tuple-minimal candidate
    let mut best: Option<(u32, u32)> = None;
    let mut i = 0;
    while i < keyed.len() {
        let mut j = i + 1;
        while j < keyed.len() && keyed[j].0 == keyed[i].0 {
            j += 1;
        }
        if j - i >= 2 {
            let cand = (keyed[i].1, keyed[i + 1].1);
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
        i = j;
    }

    match best {
        None => ResolutionCheck {
            resolving: true,
            violation: None,
        },
        Some((x, y)) => ResolutionCheck {
            resolving: false,
            violation: Some((elements[x as usize], elements[y as usize])),
        },
    }
}

/// True iff `set` induces no edge.
pub fn is_independent(g: &LabeledGraph, set: &[VertexId]) -> bool {
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Largest subset size to try (clamped to the vertex count).
    pub cap: usize,
    /// Record the exhaustive refutation of smaller sizes in the result.
    pub certify: bool,
    /// Accept only independent subsets as witnesses. Refutation still ranges
    /// over all subsets; if some smaller *dependent* subset resolves, the
    /// result cannot be certified.
    pub require_independent: bool,
    /// Hard limit on the number of subset tests.
    pub budget: u64,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: usize::MAX,
            certify: true,
            require_independent: false,
            budget: 100_000_000,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchStats {
    /// Subset tests performed, counted in lexicographic scan order. The count
    /// is defined by the witness rank, so it does not depend on the thread
    /// count.
    pub subsets_examined: u64,
    /// Sizes whose subsets were all enumerated without finding a witness.
    pub sizes_refuted: Vec<usize>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionResult {
    pub variant: Variant,
    /// The dimension, or `None` if no resolving set of size `<= cap` exists.
    pub value: Option<usize>,
    /// Lexicographically smallest resolving set of size `value`.
    pub witness: Option<Vec<VertexId>>,
    /// True when every size below `value` (down to the variant's trivial
    /// lower bound) was exhaustively refuted.
    pub certified: bool,
    pub cap: usize,
    pub stats: SearchStats,
}

#[derive(Error, Debug)]
pub enum SearchError {
    #[error("subset budget exceeded: size {size} needs {required} tests, {budget} remaining")]
    BudgetExceeded {
        size: usize,
        required: u128,
        budget: u64,
    },
    #[error("cap must be at least 1")]
    ZeroCap,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A path graph: connected, two vertices of degree 1, the rest of degree 2.
/// The one-vertex graph counts as a (trivial) path.
pub fn is_path_graph(g: &LabeledGraph) -> bool {
    let n = g.vertex_count();
    match n {
        0 => false,
        1 => true,
        _ => {
            g.is_connected()
                && (0..n).all(|v| matches!(g.degree(v), 1 | 2))
                && (0..n).filter(|&v| g.degree(v) == 1).count() == 2
        }
    }
}

/// Trivial lower bound for the search: 1 for vertex/edge metric, 2 for mixed
/// (a single vertex never resolves its own incident edge pair), and for the
/// multiset variant 1 on paths, 3 on everything else.
fn lower_bound(g: &LabeledGraph, variant: Variant) -> usize {
    match variant {
        Variant::VertexMetric | Variant::EdgeMetric => 1,
        Variant::MixedMetric => 2,
        Variant::Multiset => {
            if is_path_graph(g) {
                1
            } else {
                3
            }
        }
    }
}

/// Finds the minimum dimension of `variant` on `g` by exhaustive search in
/// lexicographic order over subset sizes `lower_bound..=cap`.
pub fn min_dimension(
    g: &LabeledGraph,
    variant: Variant,
    opts: &SearchOptions,
) -> Result<DimensionResult, SearchError> {
    if opts.cap == 0 {
        return Err(SearchError::ZeroCap);
    }
    let start = Instant::now();
    let dm = all_pairs_distances(g)?;
    let (pairs, _) = element_table(g, variant);
    let n = g.vertex_count();
    let cap = opts.cap.min(n);
    let threads = opts.threads.max(1);

    let mut examined: u64 = 0;
    let mut sizes_refuted = Vec::new();
    let mut refutation_clean = true;

    for k in lower_bound(g, variant)..=cap {
        let total = binomial(n, k);
        let remaining = opts.budget.saturating_sub(examined);
        if total > remaining as u128 {
            return Err(SearchError::BudgetExceeded {
                size: k,
                required: total,
                budget: remaining,
            });
        }
        let outcome = scan_size(
            g,
            &dm,
            &pairs,
            k,
            total as u64,
            variant,
            opts.require_independent,
            threads,
        );
        match outcome.accepted {
            Some((rank, subset)) => {
                examined += rank + 1;
                return Ok(DimensionResult {
                    variant,
                    value: Some(k),
                    witness: Some(subset),
                    certified: opts.certify && refutation_clean,
                    cap,
                    stats: SearchStats {
                        subsets_examined: examined,
                        sizes_refuted,
                        elapsed: start.elapsed(),
                    },
                });
            }
            None => {
                examined += total as u64;
                if outcome.saw_resolving {
                    // a dependent subset resolved at this size; not a refutation
                    refutation_clean = false;
                } else {
                    sizes_refuted.push(k);
                }
            }
        }
    }

    Ok(DimensionResult {
        variant,
        value: None,
        witness: None,
        certified: opts.certify && refutation_clean,
        cap,
        stats: SearchStats {
            subsets_examined: examined,
            sizes_refuted,
            elapsed: start.elapsed(),
        },
    })
}

struct SizeOutcome {
    /// Rank and content of the first accepted witness.
    accepted: Option<(u64, Vec<VertexId>)>,
    /// Whether any subset resolved (equals witness existence except under
    /// `require_independent`, where dependent witnesses are not accepted).
    saw_resolving: bool,
}

#[allow(clippy::too_many_arguments)]
fn scan_size(
    g: &LabeledGraph,
    dm: &DistanceMatrix,
    pairs: &[(u32, u32)],
    k: usize,
    total: u64,
    variant: Variant,
    require_independent: bool,
    threads: usize,
) -> SizeOutcome {
    if total == 0 {
        return SizeOutcome {
            accepted: None,
            saw_resolving: false,
        };
    }
    let n = g.vertex_count();
    // distances fit a byte and at most 8 landmarks: codes pack into one u64
    let packed = k <= 8 && dm.max_distance() < 255;

    if threads <= 1 || total < 4096 {
        return scan_range(
            g,
            dm,
            pairs,
            n,
            k,
            0,
            total,
            variant,
            require_independent,
            packed,
        );
    }

    let workers = threads.min(total as usize);
    let chunk = total.div_ceil(workers as u64);
    let outcomes: Vec<SizeOutcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let lo = w as u64 * chunk;
                let hi = (lo + chunk).min(total);
                scope.spawn(move || {
                    scan_range(
                        g,
                        dm,
                        pairs,
                        n,
                        k,
                        lo,
                        hi,
                        variant,
                        require_independent,
                        packed,
                    )
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });

    let mut accepted: Option<(u64, Vec<VertexId>)> = None;
    let mut saw_resolving = false;
    for o in outcomes {
        saw_resolving |= o.saw_resolving;
        if let Some(cand) = o.accepted {
            if accepted.as_ref().is_none_or(|best| cand.0 < best.0) {
                accepted = Some(cand);
            }
        }
    }
    SizeOutcome {
        accepted,
        saw_resolving,
    }
}

#[allow(clippy::too_many_arguments)]
fn scan_range(
    g: &LabeledGraph,
    dm: &DistanceMatrix,
    pairs: &[(u32, u32)],
    n: usize,
    k: usize,
    lo: u64,
    hi: u64,
    variant: Variant,
    require_independent: bool,
    packed: bool,
) -> SizeOutcome {
    let sorted = variant.sorted_codes();
    let mut comb = combination_at_rank(n, k, lo as u128);
    let mut keys = vec![0u64; pairs.len()];
    let mut saw_resolving = false;
    let mut rank = lo;
    while rank < hi {
        let resolving = if packed {
            distinct_packed(dm, pairs, &comb, sorted, &mut keys)
        } else {
            distinct_general(dm, pairs, &comb, sorted)
        };
        if resolving {
            saw_resolving = true;
            if !require_independent || is_independent(g, &comb) {
                return SizeOutcome {
                    accepted: Some((rank, comb)),
                    saw_resolving,
                };
            }
        }
        rank += 1;
        if rank < hi && !next_combination(&mut comb, n) {
            break;
        }
    }
    SizeOutcome {
        accepted: None,
        saw_resolving,
    }
}

fn distinct_packed(
    dm: &DistanceMatrix,
    pairs: &[(u32, u32)],
    landmarks: &[VertexId],
    sorted: bool,
    keys: &mut Vec<u64>,
) -> bool {
    let k = landmarks.len();
    keys.clear();
    let mut dbuf = [0u8; 8];
    for &(x, y) in pairs {
        for (slot, &z) in dbuf[..k].iter_mut().zip(landmarks) {
            *slot = dm.get(z, x as usize).min(dm.get(z, y as usize)) as u8;
        }
        if sorted {
            dbuf[..k].sort_unstable();
        }
        let mut key = 0u64;
        for &b in &dbuf[..k] {
            key = key << 8 | b as u64;
        }
        keys.push(key);
    }
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

fn distinct_general(
    dm: &DistanceMatrix,
    pairs: &[(u32, u32)],
    landmarks: &[VertexId],
    sorted: bool,
) -> bool {
    let mut keys: Vec<Vec<u32>> = pairs
        .iter()
        .map(|&(x, y)| {
            let mut key: Vec<u32> = landmarks
                .iter()
                .map(|&z| dm.get(z, x as usize).min(dm.get(z, y as usize)))
                .collect();
            if sorted {
                key.sort_unstable();
            }
            key
        })
        .collect();
    keys.sort_unstable();
    keys.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_hc, build_sp, HcParams, SpParams};
    use crate::graph::{Family, VertexLabel};
    use crate::subsets::binomial;

    fn path(n: usize) -> LabeledGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        LabeledGraph::from_edges(n, &edges, &[]).unwrap()
    }

    fn cycle(n: usize) -> LabeledGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        LabeledGraph::from_edges(n, &edges, &[]).unwrap()
    }

    fn hc444() -> LabeledGraph {
        build_hc(HcParams { a: 4, b: 4, c: 4 }).unwrap()
    }

    fn v(g: &LabeledGraph, family: Family, index: u32) -> VertexId {
        g.vertex_by_label(VertexLabel::new(family, index)).unwrap()
    }

    fn hc_landmarks(g: &LabeledGraph) -> Vec<VertexId> {
        vec![
            v(g, Family::P1, 1),
            v(g, Family::R1, 1),
            v(g, Family::P2, 1),
        ]
    }

    #[test]
    fn code_starts_with_zero_at_its_own_landmark() {
        let g = cycle(6);
        let dm = all_pairs_distances(&g).unwrap();
        let c = code(&dm, Element::Vertex(2), &[2, 5]);
        assert_eq!(c[0], 0);
    }

    #[test]
    fn hc444_vertex_code_spot_check() {
        let g = hc444();
        let dm = all_pairs_distances(&g).unwrap();
        let landmarks = hc_landmarks(&g);
        let t23 = Element::Vertex(v(&g, Family::T2, 3));
        assert_eq!(code(&dm, t23, &landmarks), vec![10, 14, 5]);
    }

    #[test]
    fn hc444_edge_code_spot_check() {
        let g = hc444();
        let dm = all_pairs_distances(&g).unwrap();
        let landmarks = hc_landmarks(&g);
        let e = Edge::new(v(&g, Family::U2, 5), v(&g, Family::T2, 1));
        assert!(g.has_edge(e.u(), e.v()));
        assert_eq!(code(&dm, Element::Edge(e), &landmarks), vec![7, 16, 7]);
    }

    #[test]
    fn hc444_distance_spot_checks() {
        let g = hc444();
        let dm = all_pairs_distances(&g).unwrap();
        let p11 = v(&g, Family::P1, 1);
        let p12 = v(&g, Family::P1, 2);
        let p21 = v(&g, Family::P2, 1);
        let r11 = v(&g, Family::R1, 1);
        let q17 = v(&g, Family::Q1, 7);
        assert_eq!(dm.get(p11, r11), 14);
        assert_eq!(dm.get(p11, p21), 15);
        let path_edge = Edge::new(p11, p12);
        assert_eq!(dm.vertex_edge(p11, path_edge), 0);
        assert_eq!(dm.vertex_edge(r11, path_edge), 13);
        let connector = Edge::new(q17, r11);
        assert!(g.has_edge(q17, r11));
        assert_eq!(dm.vertex_edge(p21, connector), 13);
    }

    #[test]
    fn multiset_rep_separates_p3_from_an_endpoint() {
        let g = path(3);
        let dm = all_pairs_distances(&g).unwrap();
        let reps: Vec<_> = (0..3).map(|x| multiset_rep(&dm, x, &[0])).collect();
        assert_eq!(reps, vec![vec![0], vec![1], vec![2]]);
        assert!(is_resolving(&g, &dm, &[0], Variant::Multiset).resolving);
    }

    #[test]
    fn no_two_landmarks_multiset_resolve_c6() {
        let g = cycle(6);
        let dm = all_pairs_distances(&g).unwrap();
        for x in 0..6 {
            for y in x + 1..6 {
                let check = is_resolving(&g, &dm, &[x, y], Variant::Multiset);
                assert!(!check.resolving, "{{{x},{y}}} should not resolve C6");
                assert!(check.violation.is_some());
            }
        }
    }

    #[test]
    fn hc444_known_mixed_generator() {
        let g = hc444();
        let dm = all_pairs_distances(&g).unwrap();
        let landmarks = hc_landmarks(&g);
        assert!(is_resolving(&g, &dm, &landmarks, Variant::MixedMetric).resolving);
        assert!(is_independent(&g, &landmarks));
    }

    #[test]
    fn single_vertex_never_mixed_resolves() {
        let g = hc444();
        let dm = all_pairs_distances(&g).unwrap();
        for x in 0..g.vertex_count() {
            assert!(!is_resolving(&g, &dm, &[x], Variant::MixedMetric).resolving);
        }
    }

    #[test]
    fn full_vertex_set_vertex_resolves_sp333() {
        let g = build_sp(SpParams { a: 3, b: 3, c: 3 }).unwrap();
        let dm = all_pairs_distances(&g).unwrap();
        let all: Vec<VertexId> = (0..g.vertex_count()).collect();
        assert!(is_resolving(&g, &dm, &all, Variant::VertexMetric).resolving);
    }

    #[test]
    fn violation_pair_is_lexicographically_first() {
        // in C4, landmark {0} leaves 1 and 3 at distance 1 from 0
        let g = cycle(4);
        let dm = all_pairs_distances(&g).unwrap();
        let check = is_resolving(&g, &dm, &[0], Variant::VertexMetric);
        assert!(!check.resolving);
        assert_eq!(
            check.violation,
            Some((Element::Vertex(1), Element::Vertex(3)))
        );
    }

    #[test]
    fn independence_examples() {
        let g = hc444();
        assert!(is_independent(&g, &hc_landmarks(&g)));
        let p11 = v(&g, Family::P1, 1);
        let p12 = v(&g, Family::P1, 2);
        assert!(!is_independent(&g, &[p11, p12]));
        assert!(is_independent(&g, &[]));
    }

    #[test]
    fn multiset_dimension_of_p5_is_one_with_endpoint_witness() {
        let g = path(5);
        let r = min_dimension(&g, Variant::Multiset, &SearchOptions::default()).unwrap();
        assert_eq!(r.value, Some(1));
        assert_eq!(r.witness, Some(vec![0]));
        assert!(r.certified);
        assert_eq!(r.stats.sizes_refuted, Vec::<usize>::new());
    }

    #[test]
    fn vertex_dimension_of_sp333_is_two() {
        let g = build_sp(SpParams { a: 3, b: 3, c: 3 }).unwrap();
        let r = min_dimension(&g, Variant::VertexMetric, &SearchOptions::default()).unwrap();
        assert_eq!(r.value, Some(2));
        assert!(r.certified);
        assert_eq!(r.stats.sizes_refuted, vec![1]);
        let dm = all_pairs_distances(&g).unwrap();
        assert!(
            is_resolving(&g, &dm, r.witness.as_ref().unwrap(), Variant::VertexMetric).resolving
        );
    }

    #[test]
    fn budget_guard_aborts_before_scanning() {
        let g = hc444();
        let opts = SearchOptions {
            budget: 10,
            ..SearchOptions::default()
        };
        match min_dimension(&g, Variant::MixedMetric, &opts) {
            Err(SearchError::BudgetExceeded {
                size: 2, required, ..
            }) => {
                assert_eq!(required, binomial(72, 2));
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn zero_cap_is_rejected() {
        let g = path(3);
        let opts = SearchOptions {
            cap: 0,
            ..SearchOptions::default()
        };
        assert!(matches!(
            min_dimension(&g, Variant::VertexMetric, &opts),
            Err(SearchError::ZeroCap)
        ));
    }

    #[test]
    fn cap_too_small_reports_not_found_with_refutations() {
        let g = cycle(6);
        let opts = SearchOptions {
            cap: 1,
            ..SearchOptions::default()
        };
        let r = min_dimension(&g, Variant::VertexMetric, &opts).unwrap();
        assert_eq!(r.value, None);
        assert!(r.certified);
        assert_eq!(r.stats.sizes_refuted, vec![1]);
        assert_eq!(r.stats.subsets_examined, 6);
    }

    #[test]
    fn thread_counts_agree_on_value_witness_and_stats() {
        let g = hc444();
        let single = min_dimension(&g, Variant::MixedMetric, &SearchOptions::default()).unwrap();
        for threads in [2, 3, 8] {
            let opts = SearchOptions {
                threads,
                ..SearchOptions::default()
            };
            let multi = min_dimension(&g, Variant::MixedMetric, &opts).unwrap();
            assert_eq!(multi.value, single.value);
            assert_eq!(multi.witness, single.witness);
            assert_eq!(multi.stats.subsets_examined, single.stats.subsets_examined);
            assert_eq!(multi.stats.sizes_refuted, single.stats.sizes_refuted);
        }
    }

    #[test]
    fn independent_witness_matches_plain_search_on_hc444() {
        let g = hc444();
        let plain = min_dimension(&g, Variant::MixedMetric, &SearchOptions::default()).unwrap();
        let opts = SearchOptions {
            require_independent: true,
            ..SearchOptions::default()
        };
        let indep = min_dimension(&g, Variant::MixedMetric, &opts).unwrap();
        assert_eq!(indep.value, plain.value);
        assert!(indep.certified);
        assert!(is_independent(&g, indep.witness.as_ref().unwrap()));
    }

    #[test]
    fn sorted_code_equals_multiset_rep() {
        let g = hc444();
        let dm = all_pairs_distances(&g).unwrap();
        let landmarks = hc_landmarks(&g);
        for x in 0..g.vertex_count() {
            let mut c = code(&dm, Element::Vertex(x), &landmarks);
            c.sort_unstable();
            assert_eq!(c, multiset_rep(&dm, x, &landmarks));
        }
    }
}
