//! Audits claimed closed-form codes and reference code tables against the
//! BFS distance oracle.
//!
//! Three entry points:
//! - [`audit_hc`] evaluates every claimed code family on HC(a,b,c) and
//!   compares it element by element with oracle codes, including the class
//!   cardinality bookkeeping and code-collision diagnostics.
//! - [`audit_sp`] compares the claimed starphene multirepresentation triples
//!   with oracle multisets, under the stated landmark set and under every
//!   subset one element smaller, reporting which hypothesis (if any)
//!   reproduces the claimed triples and which hypotheses actually resolve.
//! - [`fixture_check_hc444`] checks the shipped HC(4,4,4) reference code
//!   tables row by row against the oracle.
//!
//! Claimed values are data, not truth: mismatches are reported, never fixed.

pub mod fixtures;
pub mod formulas;

use std::collections::{HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::generators::{build_hc, build_sp, GeneratorError, HcParams, SpParams};
use crate::graph::{
    all_pairs_distances, DistanceMatrix, Edge, Family, GraphError, LabeledGraph, VertexId,
    VertexLabel,
};
use crate::resolve::{code, is_resolving, multiset_rep, Element, Variant};

use fixtures::{load_hc444_fixtures, FixtureKind, FixtureRow};
use formulas::{hc_families, ElementRule, FormulaFamily, SP_VERTEX_FAMILIES};

#[derive(Error, Debug)]
pub enum AuditError {
    #[error("unknown formula family {0:?}")]
    UnknownFamily(String),
    #[error("index {index} outside range 1..={max} of family {family}")]
    IndexOutOfRange {
        family: String,
        index: u32,
        max: i64,
    },
    #[error("no case covers index {index} of family {family}")]
    NoCase { family: String, index: u32 },
    #[error("element {0} is not present in the generated graph")]
    MissingElement(String),
    #[error("fixture parse error at line {line}: {msg}")]
    Fixture { line: usize, msg: String },
    #[error("duplicate fixture row for {family} index {index}")]
    DuplicateFixtureRow { family: String, index: u32 },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Clone, Copy, Debug)]
pub struct Instance {
    pub family: &'static str,
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

#[derive(Serialize, Clone, Debug)]
pub struct AuditRow {
    pub kind: &'static str,
    pub family: String,
    pub index: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index2: Option<u32>,
    pub element: String,
    pub claimed: Vec<i64>,
    pub oracle: Vec<i64>,
    #[serde(rename = "match")]
    pub matched: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct FamilySummary {
    pub family: String,
    pub total: usize,
    pub matches: usize,
    pub mismatches: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct Totals {
    pub rows: usize,
    pub vertex_rows: usize,
    pub edge_rows: usize,
    pub matches: usize,
    pub mismatches: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct ClassSize {
    pub family: String,
    pub claimed: i64,
    pub actual: usize,
    #[serde(rename = "match")]
    pub matched: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct Bookkeeping {
    pub classes: Vec<ClassSize>,
    pub claimed_total: i64,
    pub actual_total: usize,
    pub expected_total: i64,
    #[serde(rename = "match")]
    pub matched: bool,
}

/// Counts of element pairs sharing a code under the audit landmarks, split
/// by element kind. The vertex-edge count measures how often the mixed
/// comparison depends on separating a vertex from an edge.
#[derive(Serialize, Clone, Copy, Debug)]
pub struct CollisionDiagnostics {
    pub vertex_vertex: u64,
    pub edge_edge: u64,
    pub vertex_edge: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct HypothesisReport {
    pub landmarks: Vec<String>,
    pub landmark_count: usize,
    pub printed_length: usize,
    pub length_mismatch: bool,
    pub matches: usize,
    pub total: usize,
    pub match_fraction: f64,
    pub multiset_resolving: bool,
    pub class_sizes: Vec<ClassSize>,
    pub classes_pairwise_disjoint: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct AuditReport {
    pub instance: Instance,
    pub source: &'static str,
    pub landmarks: Vec<String>,
    pub notes: Vec<String>,
    pub rows: Vec<AuditRow>,
    pub summary: Vec<FamilySummary>,
    pub totals: Totals,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bookkeeping: Option<Bookkeeping>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collisions: Option<CollisionDiagnostics>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<Vec<HypothesisReport>>,
}

impl AuditReport {
    pub fn mismatch_count(&self) -> usize {
        self.totals.mismatches
    }

    pub fn mismatching_families(&self) -> Vec<&str> {
        self.summary
            .iter()
            .filter(|s| s.mismatches > 0)
            .map(|s| s.family.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("audit report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let i = &self.instance;
        out.push_str(&format!(
            "audit {}({},{},{}) source={} landmarks={}\n",
            i.family,
            i.a,
            i.b,
            i.c,
            self.source,
            self.landmarks.join(",")
        ));
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out.push_str(&format!(
            "rows: {} ({} vertex, {} edge)  matches: {}  mismatches: {}\n",
            self.totals.rows,
            self.totals.vertex_rows,
            self.totals.edge_rows,
            self.totals.matches,
            self.totals.mismatches
        ));
        out.push_str("\nfamily         total  match  mismatch\n");
        for s in &self.summary {
            out.push_str(&format!(
                "{:<14} {:>5} {:>6} {:>9}\n",
                s.family, s.total, s.matches, s.mismatches
            ));
        }
        let mismatching: Vec<&AuditRow> = self.rows.iter().filter(|r| !r.matched).collect();
        if !mismatching.is_empty() {
            out.push_str("\nmismatching rows:\n");
            for r in mismatching {
                out.push_str(&format!(
                    "  {} g={} ({}): claimed {:?} oracle {:?}\n",
                    r.family, r.index, r.element, r.claimed, r.oracle
                ));
            }
        }
        if let Some(b) = &self.bookkeeping {
            out.push_str(&format!(
                "\nbookkeeping: claimed total {} / counted {} / expected {} => {}\n",
                b.claimed_total,
                b.actual_total,
                b.expected_total,
                if b.matched { "ok" } else { "MISMATCH" }
            ));
        }
        if let Some(c) = &self.collisions {
            out.push_str(&format!(
                "collisions: vertex-vertex {} edge-edge {} vertex-edge {}\n",
                c.vertex_vertex, c.edge_edge, c.vertex_edge
            ));
        }
        if let Some(hyps) = &self.hypotheses {
            out.push_str("\nlandmark hypotheses:\n");
            for h in hyps {
                out.push_str(&format!(
                    "  {{{}}}: matches {}/{} ({:.2}), multiset-resolving: {}{}\n",
                    h.landmarks.join(","),
                    h.matches,
                    h.total,
                    h.match_fraction,
                    h.multiset_resolving,
                    if h.length_mismatch {
                        " (representation length differs from printed triples)"
                    } else {
                        ""
                    }
                ));
            }
        }
        out
    }
}

/// The landmark list the claimed coronoid codes are stated for.
pub fn default_hc_landmarks() -> Vec<VertexLabel> {
    vec![
        VertexLabel::new(Family::P1, 1),
        VertexLabel::new(Family::R1, 1),
        VertexLabel::new(Family::P2, 1),
    ]
}

/// The stated starphene landmark set: the terminal p1 and r1 vertices plus
/// q2:1 and q2:3. Four vertices, although the claimed representations are
/// triples; the audit measures both readings.
pub fn default_sp_hypothesis(params: SpParams) -> Vec<VertexLabel> {
    vec![
        VertexLabel::new(Family::P1, 2 * params.b - 1),
        VertexLabel::new(Family::R1, 2 * params.a - 1),
        VertexLabel::new(Family::Q2, 1),
        VertexLabel::new(Family::Q2, 3),
    ]
}

fn resolve_landmarks(
    g: &LabeledGraph,
    labels: &[VertexLabel],
) -> Result<Vec<VertexId>, AuditError> {
    labels
        .iter()
        .map(|&l| g.require_vertex(l).map_err(AuditError::from))
        .collect()
}

/// Maps a family's running index to its graph element.
fn resolve_element(
    g: &LabeledGraph,
    fam: &FormulaFamily,
    idx: u32,
    a: u32,
    b: u32,
    c: u32,
) -> Result<Element, AuditError> {
    let lookup = |family: Family, index: i64| -> Result<VertexId, AuditError> {
        if index < 1 {
            return Err(AuditError::MissingElement(format!("{family}:{index}")));
        }
        g.vertex_by_label(VertexLabel::new(family, index as u32))
            .ok_or_else(|| AuditError::MissingElement(format!("{family}:{index}")))
    };
    let (ai, bi, ci) = (a as i64, b as i64, c as i64);
    match fam.rule {
        ElementRule::Vertex(f) => Ok(Element::Vertex(lookup(f, idx as i64)?)),
        ElementRule::PathEdge(f) => {
            let u = lookup(f, idx as i64)?;
            let v = lookup(f, idx as i64 + 1)?;
            Ok(Element::Edge(Edge::new(u, v)))
        }
        ElementRule::Spoke(outer, inner) => {
            let u = lookup(outer, 2 * idx as i64)?;
            let v = lookup(inner, 2 * idx as i64 - 1)?;
            Ok(Element::Edge(Edge::new(u, v)))
        }
        ElementRule::Connector((f1, i1), (f2, i2)) => {
            let u = lookup(f1, i1.eval(ai, bi, ci, 0))?;
            let v = lookup(f2, i2.eval(ai, bi, ci, 0))?;
            Ok(Element::Edge(Edge::new(u, v)))
        }
    }
}

/// Order-preserving parallel map over chunks; output order is input order
/// whatever the thread count.
fn parallel_map<T, U, F>(items: &[T], threads: usize, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads <= 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let f = &f;
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|slice| scope.spawn(move || slice.iter().map(f).collect::<Vec<U>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("audit worker panicked"))
            .collect()
    })
}

fn summarize(rows: &[AuditRow]) -> (Vec<FamilySummary>, Totals) {
    let mut summary: Vec<FamilySummary> = Vec::new();
    let mut totals = Totals {
        rows: rows.len(),
        vertex_rows: 0,
        edge_rows: 0,
        matches: 0,
        mismatches: 0,
    };
    for row in rows {
        if row.kind == "vertex" {
            totals.vertex_rows += 1;
        } else {
            totals.edge_rows += 1;
        }
        if row.matched {
            totals.matches += 1;
        } else {
            totals.mismatches += 1;
        }
        match summary.last_mut() {
            Some(s) if s.family == row.family => {
                s.total += 1;
                if row.matched {
                    s.matches += 1;
                } else {
                    s.mismatches += 1;
                }
            }
            _ => summary.push(FamilySummary {
                family: row.family.clone(),
                total: 1,
                matches: usize::from(row.matched),
                mismatches: usize::from(!row.matched),
            }),
        }
    }
    (summary, totals)
}

fn collision_diagnostics(
    g: &LabeledGraph,
    dm: &DistanceMatrix,
    landmarks: &[VertexId],
) -> CollisionDiagnostics {
    let mut keyed: Vec<(Vec<u32>, bool)> = Vec::with_capacity(g.vertex_count() + g.edge_count());
    for v in 0..g.vertex_count() {
        keyed.push((code(dm, Element::Vertex(v), landmarks), true));
    }
    for e in g.edges() {
        keyed.push((code(dm, Element::Edge(e), landmarks), false));
    }
    keyed.sort_unstable();
    let mut d = CollisionDiagnostics {
        vertex_vertex: 0,
        edge_edge: 0,
        vertex_edge: 0,
    };
    let mut i = 0;
    while i < keyed.len() {
        let mut j = i + 1;
        while j < keyed.len() && keyed[j].0 == keyed[i].0 {
            j += 1;
        }
        let vertices = keyed[i..j].iter().filter(|(_, v)| *v).count() as u64;
        let edges = (j - i) as u64 - vertices;
        d.vertex_vertex += vertices * vertices.saturating_sub(1) / 2;
        d.edge_edge += edges * edges.saturating_sub(1) / 2;
        d.vertex_edge += vertices * edges;
        i = j;
    }
    d
}

fn class_actual_size(g: &LabeledGraph, fam: &FormulaFamily, a: u32, b: u32, c: u32) -> usize {
    match fam.rule {
        ElementRule::Vertex(f) => (0..g.vertex_count())
            .filter(|&v| g.label(v).map(|l| l.family) == Some(f))
            .count(),
        ElementRule::PathEdge(f) => g
            .edges()
            .iter()
            .filter(|e| {
                g.label(e.u()).map(|l| l.family) == Some(f)
                    && g.label(e.v()).map(|l| l.family) == Some(f)
            })
            .count(),
        ElementRule::Spoke(f1, f2) => g
            .edges()
            .iter()
            .filter(|e| {
                let fu = g.label(e.u()).map(|l| l.family);
                let fv = g.label(e.v()).map(|l| l.family);
                (fu == Some(f1) && fv == Some(f2)) || (fu == Some(f2) && fv == Some(f1))
            })
            .count(),
        ElementRule::Connector(..) => match resolve_element(g, fam, 1, a, b, c) {
            Ok(Element::Edge(e)) => usize::from(g.has_edge(e.u(), e.v())),
            _ => 0,
        },
    }
}

/// Audits every claimed code family of HC(a,b,c) against oracle codes
/// relative to `landmarks` (the stated triple by default).
pub fn audit_hc(
    params: HcParams,
    landmarks: Option<Vec<VertexLabel>>,
    threads: usize,
) -> Result<AuditReport, AuditError> {
    let HcParams { a, b, c } = params;
    let graph = build_hc(params)?;
    let dm = all_pairs_distances(&graph)?;
    let landmark_labels = landmarks.unwrap_or_else(default_hc_landmarks);
    let landmark_ids = resolve_landmarks(&graph, &landmark_labels)?;

    let jobs: Vec<(&FormulaFamily, u32)> = hc_families()
        .flat_map(|fam| {
            let max = fam.max_index(a, b, c).max(0) as u32;
            (1..=max).map(move |g| (fam, g))
        })
        .collect();

    let rows: Vec<AuditRow> = {
        let graph = &graph;
        let dm = &dm;
        let landmark_ids = &landmark_ids;
        let computed = parallel_map(
            &jobs,
            threads,
            move |&(fam, g)| -> Result<AuditRow, AuditError> {
                let element = resolve_element(graph, fam, g, a, b, c)?;
                let claimed = fam.evaluate(g, a, b, c)?.to_vec();
                let oracle: Vec<i64> = code(dm, element, landmark_ids)
                    .into_iter()
                    .map(i64::from)
                    .collect();
                let matched = claimed == oracle;
                Ok(AuditRow {
                    kind: match element {
                        Element::Vertex(_) => "vertex",
                        Element::Edge(_) => "edge",
                    },
                    family: fam.id.to_string(),
                    index: g,
                    index2: match fam.rule {
                        ElementRule::PathEdge(_) => Some(g + 1),
                        _ => None,
                    },
                    element: element.describe(graph),
                    claimed,
                    oracle,
                    matched,
                    note: None,
                })
            },
        );
        computed.into_iter().collect::<Result<Vec<_>, _>>()?
    };

    let (summary, totals) = summarize(&rows);

    let mut classes = Vec::new();
    let mut claimed_total: i64 = 0;
    for fam in hc_families() {
        let claimed = fam.max_index(a, b, c);
        let actual = class_actual_size(&graph, fam, a, b, c);
        claimed_total += claimed;
        classes.push(ClassSize {
            family: fam.id.to_string(),
            claimed,
            actual,
            matched: claimed == actual as i64,
        });
    }
    let expected_total = 18 * (a as i64 + b as i64 + c as i64 - 3);
    let actual_total = graph.vertex_count() + graph.edge_count();
    let bookkeeping = Bookkeeping {
        matched: classes.iter().all(|cl| cl.matched)
            && claimed_total == expected_total
            && actual_total as i64 == expected_total,
        classes,
        claimed_total,
        actual_total,
        expected_total,
    };

    let collisions = collision_diagnostics(&graph, &dm, &landmark_ids);

    Ok(AuditReport {
        instance: Instance {
            family: "hc",
            a,
            b,
            c,
        },
        source: "formulas",
        landmarks: landmark_labels.iter().map(|l| l.to_string()).collect(),
        notes: Vec::new(),
        rows,
        summary,
        totals,
        bookkeeping: Some(bookkeeping),
        collisions: Some(collisions),
        hypotheses: None,
    })
}

/// Audits the claimed starphene multirepresentation triples on SP(a,b,c).
///
/// The stated landmark set (four vertices by default) and each of its
/// one-smaller subsets are tried as hypotheses; for every hypothesis the
/// report records the fraction of vertices whose oracle multiset equals the
/// claimed triple and whether the hypothesis is multiset-resolving at all.
/// The primary rows compare against the stated set itself.
pub fn audit_sp(
    params: SpParams,
    hypothesis: Option<Vec<VertexLabel>>,
    threads: usize,
) -> Result<AuditReport, AuditError> {
    let SpParams { a, b, c } = params;
    let graph = build_sp(params)?;
    let dm = all_pairs_distances(&graph)?;
    let stated = hypothesis.unwrap_or_else(|| default_sp_hypothesis(params));
    resolve_landmarks(&graph, &stated)?;

    let mut hypothesis_sets: Vec<Vec<VertexLabel>> = vec![stated.clone()];
    if stated.len() > 1 {
        for drop in 0..stated.len() {
            let mut h = stated.clone();
            h.remove(drop);
            hypothesis_sets.push(h);
        }
    }

    // claimed triples, evaluated once per vertex
    let jobs: Vec<(&FormulaFamily, u32)> = SP_VERTEX_FAMILIES
        .iter()
        .flat_map(|fam| {
            let max = fam.max_index(a, b, c).max(0) as u32;
            (1..=max).map(move |g| (fam, g))
        })
        .collect();
    let claimed_rows: Vec<(&FormulaFamily, u32, VertexId, [i64; 3])> = jobs
        .iter()
        .map(|&(fam, g)| -> Result<_, AuditError> {
            let element = resolve_element(&graph, fam, g, a, b, c)?;
            let Element::Vertex(v) = element else {
                unreachable!("starphene families are vertex families")
            };
            Ok((fam, g, v, fam.evaluate(g, a, b, c)?))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let compare = |claimed: &[i64; 3], oracle: &[u32]| -> bool {
        if oracle.len() != 3 {
            return false;
        }
        let mut sorted = *claimed;
        sorted.sort_unstable();
        sorted.iter().zip(oracle).all(|(&cl, &or)| cl == or as i64)
    };

    let mut hypotheses = Vec::new();
    for hyp in &hypothesis_sets {
        let ids = resolve_landmarks(&graph, hyp)?;
        let reps: Vec<Vec<u32>> = parallel_map(&claimed_rows, threads, |&(_, _, v, _)| {
            multiset_rep(&dm, v, &ids)
        });
        let matches = claimed_rows
            .iter()
            .zip(&reps)
            .filter(|((_, _, _, claimed), rep)| compare(claimed, rep))
            .count();

        let mut class_sizes = Vec::new();
        let mut family_sets: Vec<HashSet<Vec<u32>>> = Vec::new();
        for fam in SP_VERTEX_FAMILIES {
            let set: HashSet<Vec<u32>> = claimed_rows
                .iter()
                .zip(&reps)
                .filter(|((f, _, _, _), _)| f.id == fam.id)
                .map(|(_, rep)| rep.clone())
                .collect();
            let claimed_size = fam.max_index(a, b, c);
            class_sizes.push(ClassSize {
                family: fam.id.to_string(),
                claimed: claimed_size,
                actual: set.len(),
                matched: claimed_size == set.len() as i64,
            });
            family_sets.push(set);
        }
        let mut disjoint = true;
        for i in 0..family_sets.len() {
            for j in i + 1..family_sets.len() {
                if family_sets[i]
                    .intersection(&family_sets[j])
                    .next()
                    .is_some()
                {
                    disjoint = false;
                }
            }
        }

        hypotheses.push(HypothesisReport {
            landmarks: hyp.iter().map(|l| l.to_string()).collect(),
            landmark_count: hyp.len(),
            printed_length: 3,
            length_mismatch: hyp.len() != 3,
            matches,
            total: claimed_rows.len(),
            match_fraction: matches as f64 / claimed_rows.len().max(1) as f64,
            multiset_resolving: is_resolving(&graph, &dm, &ids, Variant::Multiset).resolving,
            class_sizes,
            classes_pairwise_disjoint: disjoint,
        });
    }

    // primary rows compare against the stated set
    let stated_ids = resolve_landmarks(&graph, &stated)?;
    let rows: Vec<AuditRow> = claimed_rows
        .iter()
        .map(|&(fam, g, v, claimed)| {
            let oracle_rep = multiset_rep(&dm, v, &stated_ids);
            let matched = compare(&claimed, &oracle_rep);
            AuditRow {
                kind: "vertex",
                family: fam.id.to_string(),
                index: g,
                index2: None,
                element: graph.describe_vertex(v),
                claimed: claimed.to_vec(),
                oracle: oracle_rep.into_iter().map(i64::from).collect(),
                matched,
                note: None,
            }
        })
        .collect();

    let (summary, totals) = summarize(&rows);

    let mut notes = vec![format!(
        "claimed representations are triples; the stated landmark set has {} vertices",
        stated.len()
    )];
    if stated.len() != 3 {
        notes.push(
            "primary rows compare sorted claimed triples with the stated set's multisets, \
             so a length mismatch marks every row unmatched; see hypotheses for 3-subsets"
                .to_string(),
        );
    }

    Ok(AuditReport {
        instance: Instance {
            family: "sp",
            a,
            b,
            c,
        },
        source: "formulas",
        landmarks: stated.iter().map(|l| l.to_string()).collect(),
        notes,
        rows,
        summary,
        totals,
        bookkeeping: None,
        collisions: None,
        hypotheses: Some(hypotheses),
    })
}

const SPOKE_FAMILY_IDS: [&str; 6] = ["p1s1", "p2s2", "q1t1", "q2u2", "r1u1", "r2t2"];

fn fixture_family_key(row: &FixtureRow, line_hint: usize) -> Result<(String, u32), AuditError> {
    match row.kind {
        FixtureKind::Vertex => Ok((row.family.clone(), row.index)),
        FixtureKind::Edge => {
            if row.family == "conn" {
                Ok((format!("conn{}", row.index), 1))
            } else if SPOKE_FAMILY_IDS.contains(&row.family.as_str()) {
                Ok((row.family.clone(), row.index))
            } else {
                if let Some(i2) = row.index2 {
                    if i2 != row.index + 1 {
                        return Err(AuditError::Fixture {
                            line: line_hint,
                            msg: format!(
                                "path edge indices {} and {i2} are not adjacent",
                                row.index
                            ),
                        });
                    }
                }
                Ok((format!("{}-path", row.family), row.index))
            }
        }
    }
}

/// Checks every shipped HC(4,4,4) reference row against the oracle codes of
/// the generated graph. The oracle is authoritative: mismatching rows are
/// itemized with both values.
pub fn fixture_check_hc444() -> Result<AuditReport, AuditError> {
    let params = HcParams { a: 4, b: 4, c: 4 };
    let (a, b, c) = (4, 4, 4);
    let graph = build_hc(params)?;
    let dm = all_pairs_distances(&graph)?;
    let landmark_labels = default_hc_landmarks();
    let landmark_ids = resolve_landmarks(&graph, &landmark_labels)?;

    let mut by_key: HashMap<(String, u32), FixtureRow> = HashMap::new();
    for (line_hint, row) in load_hc444_fixtures()?.into_iter().enumerate() {
        let key = fixture_family_key(&row, line_hint + 1)?;
        if by_key.insert(key.clone(), row).is_some() {
            return Err(AuditError::DuplicateFixtureRow {
                family: key.0,
                index: key.1,
            });
        }
    }

    let mut rows = Vec::new();
    for fam in hc_families() {
        let max = fam.max_index(a, b, c).max(0) as u32;
        for g in 1..=max {
            let Some(fixture) = by_key.remove(&(fam.id.to_string(), g)) else {
                continue;
            };
            let element = resolve_element(&graph, fam, g, a, b, c)?;
            let oracle: Vec<i64> = code(&dm, element, &landmark_ids)
                .into_iter()
                .map(i64::from)
                .collect();
            let claimed = fixture.code.to_vec();
            let matched = claimed == oracle;
            rows.push(AuditRow {
                kind: match element {
                    Element::Vertex(_) => "vertex",
                    Element::Edge(_) => "edge",
                },
                family: fam.id.to_string(),
                index: g,
                index2: fixture.index2,
                element: element.describe(&graph),
                claimed,
                oracle,
                matched,
                note: fixture.note,
            });
        }
    }
    if let Some(((family, index), _)) = by_key.into_iter().next() {
        return Err(AuditError::Fixture {
            line: 0,
            msg: format!("fixture row {family} index {index} matches no audited element"),
        });
    }

    let (summary, totals) = summarize(&rows);
    let collisions = collision_diagnostics(&graph, &dm, &landmark_ids);

    Ok(AuditReport {
        instance: Instance {
            family: "hc",
            a,
            b,
            c,
        },
        source: "fixtures",
        landmarks: landmark_labels.iter().map(|l| l.to_string()).collect(),
        notes: vec![
            "the reference tables list 89 of the 90 edges: conn1 (p1:1-q2:1) has no row"
                .to_string(),
        ],
        rows,
        summary,
        totals,
        bookkeeping: None,
        collisions: Some(collisions),
        hypotheses: None,
    })
}
