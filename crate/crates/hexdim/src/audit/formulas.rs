//! Verbatim transcriptions of the claimed closed-form code families.
//!
//! Each family assigns a triple of affine expressions in `(a, b, c, g)` to a
//! run of elements (a vertex family, a path-edge family, a spoke family, or a
//! single connector edge). The expressions are transcribed exactly as
//! claimed, wrong ones included: the audit compares them with the oracle, it
//! does not repair them. Evaluation is over signed integers because some of
//! the claimed offsets go negative below the parameter ranges the claims were
//! made for.

use crate::graph::Family;

use super::AuditError;

/// `a·ka + b·kb + c·kc + g·kg + k`.
#[derive(Clone, Copy, Debug)]
pub struct Affine {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub g: i64,
    pub k: i64,
}

impl Affine {
    pub fn eval(&self, a: i64, b: i64, c: i64, g: i64) -> i64 {
        self.a * a + self.b * b + self.c * c + self.g * g + self.k
    }
}

const fn aff(a: i64, b: i64, c: i64, g: i64, k: i64) -> Affine {
    Affine { a, b, c, g, k }
}

const fn konst(k: i64) -> Affine {
    aff(0, 0, 0, 0, k)
}

/// One piecewise case, applying for indices `lo..=hi` (bounds affine in
/// `a, b, c`; a case with `lo > hi` at given parameters is simply inactive).
#[derive(Clone, Copy, Debug)]
pub struct Case {
    pub lo: Affine,
    pub hi: Affine,
    pub code: [Affine; 3],
}

const fn case(lo: Affine, hi: Affine, c1: Affine, c2: Affine, c3: Affine) -> Case {
    Case {
        lo,
        hi,
        code: [c1, c2, c3],
    }
}

/// How a family's running index maps to a graph element.
#[derive(Clone, Copy, Debug)]
pub enum ElementRule {
    Vertex(Family),
    /// Path edge between family indices `g` and `g+1`.
    PathEdge(Family),
    /// Spoke edge between outer index `2g` and inner index `2g-1`.
    Spoke(Family, Family),
    /// A single fixed edge; endpoint indices are affine in `(a, b, c)`.
    Connector((Family, Affine), (Family, Affine)),
}

#[derive(Clone, Copy, Debug)]
pub struct FormulaFamily {
    pub id: &'static str,
    pub rule: ElementRule,
    /// Indices run over `1..=max_index` (affine in `a, b, c`).
    pub max_index: Affine,
    pub cases: &'static [Case],
}

impl FormulaFamily {
    pub fn max_index(&self, a: u32, b: u32, c: u32) -> i64 {
        self.max_index.eval(a as i64, b as i64, c as i64, 0)
    }

    /// Evaluates the claimed code triple at index `g`.
    pub fn evaluate(&self, g: u32, a: u32, b: u32, c: u32) -> Result<[i64; 3], AuditError> {
        let (ai, bi, ci, gi) = (a as i64, b as i64, c as i64, g as i64);
        let max = self.max_index.eval(ai, bi, ci, 0);
        if g == 0 || gi > max {
            return Err(AuditError::IndexOutOfRange {
                family: self.id.to_string(),
                index: g,
                max,
            });
        }
        for case in self.cases {
            let lo = case.lo.eval(ai, bi, ci, 0);
            let hi = case.hi.eval(ai, bi, ci, 0);
            if lo <= gi && gi <= hi {
                return Ok([
                    case.code[0].eval(ai, bi, ci, gi),
                    case.code[1].eval(ai, bi, ci, gi),
                    case.code[2].eval(ai, bi, ci, gi),
                ]);
            }
        }
        Err(AuditError::NoCase {
            family: self.id.to_string(),
            index: g,
        })
    }
}

use Family::*;

/// Vertex code families of the hollow coronoid, construction order.
#[rustfmt::skip]
pub const HC_VERTEX_FAMILIES: &[FormulaFamily] = &[
    FormulaFamily {
        id: "p1",
        rule: ElementRule::Vertex(P1),
        max_index: aff(2, 0, 0, 0, -1),
        cases: &[
            case(konst(1), konst(1), aff(0, 0, 0, 1, -1), aff(2, 0, 2, -1, -1), aff(0, 2, 2, 0, -1)),
            case(konst(2), aff(2, 0, 0, 0, -1), aff(0, 0, 0, 1, -1), aff(2, 0, 2, -1, -1), aff(0, 2, 2, 1, -4)),
        ],
    },
    FormulaFamily {
        id: "p2",
        rule: ElementRule::Vertex(P2),
        max_index: aff(2, 0, 0, 0, -1),
        cases: &[
            case(konst(1), konst(1), aff(0, 2, 2, 0, -1), aff(2, 2, 0, -1, -2), aff(0, 0, 0, 1, -1)),
            case(konst(2), aff(2, 0, 0, 0, -1), aff(0, 2, 2, 1, -4), aff(2, 2, 0, -1, -2), aff(0, 0, 0, 1, -1)),
        ],
    },
    FormulaFamily {
        id: "q1",
        rule: ElementRule::Vertex(Q1),
        max_index: aff(0, 0, 2, 0, -1),
        cases: &[
            case(konst(1), aff(0, 0, 2, 0, -2), aff(2, 0, 0, 1, -2), aff(0, 0, 2, -1, 0), aff(2, 2, 2, -1, -5)),
            case(aff(0, 0, 2, 0, -1), aff(0, 0, 2, 0, -1), aff(2, 0, 0, 1, -2), aff(0, 0, 2, -1, 0), aff(2, 2, 0, 0, -2)),
        ],
    },
    FormulaFamily {
        id: "q2",
        rule: ElementRule::Vertex(Q2),
        max_index: aff(0, 0, 2, 0, -1),
        cases: &[
            case(konst(1), konst(1), aff(0, 0, 0, 1, 0), aff(0, 2, 2, -1, -1), aff(2, 0, 2, 0, -1)),
            case(konst(2), aff(0, 0, 2, 0, -1), aff(0, 0, 0, 1, 0), aff(0, 2, 2, -1, -1), aff(2, 0, 2, 1, -4)),
        ],
    },
    FormulaFamily {
        id: "r1",
        rule: ElementRule::Vertex(R1),
        max_index: aff(0, 2, 0, 0, -1),
        cases: &[
            case(konst(1), konst(1), aff(2, 0, 2, 0, -2), aff(0, 0, 0, 1, -1), aff(2, 2, 0, -1, -2)),
            case(konst(2), aff(0, 2, 0, 0, -1), aff(2, 0, 2, 1, -5), aff(0, 0, 0, 1, -1), aff(2, 2, 0, -1, -2)),
        ],
    },
    FormulaFamily {
        id: "r2",
        rule: ElementRule::Vertex(R2),
        max_index: aff(0, 2, 0, 0, -1),
        cases: &[
            case(konst(1), aff(0, 2, 0, 0, -2), aff(0, 0, 2, 1, -1), aff(0, 2, 0, -1, 0), aff(2, 4, 0, -1, -5)),
            case(aff(0, 2, 0, 0, -1), aff(0, 2, 0, 0, -1), aff(0, 0, 2, 1, -1), aff(0, 2, 0, -1, 0), aff(2, 2, 0, 0, -2)),
        ],
    },
    FormulaFamily {
        id: "s1",
        rule: ElementRule::Vertex(S1),
        max_index: aff(2, 0, 0, 0, -3),
        cases: &[case(konst(1), aff(2, 0, 0, 0, -3), aff(0, 0, 0, 1, 1), aff(2, 0, 2, -1, -3), aff(0, 2, 2, 1, -4))],
    },
    FormulaFamily {
        id: "s2",
        rule: ElementRule::Vertex(S2),
        max_index: aff(2, 0, 0, 0, -3),
        cases: &[case(konst(1), aff(2, 0, 0, 0, -3), aff(2, 0, 2, 1, -6), aff(2, 2, 0, -1, -4), aff(0, 0, 0, 1, 1))],
    },
    FormulaFamily {
        id: "t1",
        rule: ElementRule::Vertex(T1),
        max_index: aff(0, 0, 2, 0, -3),
        cases: &[case(konst(1), aff(0, 0, 2, 0, -3), aff(2, 0, 0, 1, -2), aff(0, 0, 2, -1, 0), aff(2, 2, 2, -1, -7))],
    },
    FormulaFamily {
        id: "t2",
        rule: ElementRule::Vertex(T2),
        max_index: aff(0, 2, 0, 0, -3),
        cases: &[case(konst(1), aff(0, 2, 0, 0, -3), aff(0, 0, 2, 1, -1), aff(2, 4, 0, -1, -7), aff(0, 2, 0, -1, 0))],
    },
    FormulaFamily {
        id: "u1",
        rule: ElementRule::Vertex(U1),
        max_index: aff(0, 2, 0, 0, -3),
        cases: &[case(konst(1), aff(0, 2, 0, 0, -3), aff(2, 0, 2, 1, -5), aff(0, 0, 0, 1, 1), aff(2, 2, 0, -1, -4))],
    },
    FormulaFamily {
        id: "u2",
        rule: ElementRule::Vertex(U2),
        max_index: aff(0, 0, 2, 0, -3),
        cases: &[case(konst(1), aff(0, 0, 2, 0, -3), aff(0, 0, 0, 1, 2), aff(2, 0, 2, 1, -4), aff(0, 2, 2, -1, -3))],
    },
];

/// Path-edge code families of the hollow coronoid. The claimed cases for the
/// q1 path edges overlap as printed (`1..=2c-3` and `2..=2c-2`); they are
/// normalized here to the partition `1..=2c-3`, `{2c-2}`, the only reading
/// consistent with the reference table at a = b = c = 4.
#[rustfmt::skip]
pub const HC_PATH_EDGE_FAMILIES: &[FormulaFamily] = &[
    FormulaFamily {
        id: "p1-path",
        rule: ElementRule::PathEdge(P1),
        max_index: aff(2, 0, 0, 0, -2),
        cases: &[
            case(konst(1), konst(1), aff(0, 0, 0, 1, -1), aff(2, 0, 2, -1, -2), aff(0, 2, 2, 0, -2)),
            case(konst(2), aff(2, 0, 0, 0, -2), aff(0, 0, 0, 1, -1), aff(2, 0, 2, -1, -2), aff(0, 2, 2, 1, -4)),
        ],
    },
    FormulaFamily {
        id: "p2-path",
        rule: ElementRule::PathEdge(P2),
        max_index: aff(2, 0, 0, 0, -2),
        cases: &[
            case(konst(1), konst(1), aff(0, 2, 2, 0, -2), aff(2, 2, 0, -1, -3), aff(0, 0, 0, 1, -1)),
            case(konst(2), aff(2, 0, 0, 0, -2), aff(0, 2, 2, 1, -4), aff(2, 2, 0, -1, -3), aff(0, 0, 0, 1, -1)),
        ],
    },
    FormulaFamily {
        id: "q1-path",
        rule: ElementRule::PathEdge(Q1),
        max_index: aff(0, 0, 2, 0, -2),
        cases: &[
            case(konst(1), aff(0, 0, 2, 0, -3), aff(2, 0, 0, 1, -2), aff(0, 0, 2, -1, -1), aff(2, 2, 2, -1, -6)),
            case(aff(0, 0, 2, 0, -2), aff(0, 0, 2, 0, -2), aff(2, 0, 0, 1, -2), aff(0, 0, 2, -1, -1), aff(2, 2, 0, 0, -3)),
        ],
    },
    FormulaFamily {
        id: "q2-path",
        rule: ElementRule::PathEdge(Q2),
        max_index: aff(0, 0, 2, 0, -2),
        cases: &[
            case(konst(1), konst(1), aff(0, 0, 0, 1, 0), aff(2, 0, 2, 0, -2), aff(0, 2, 2, -1, -2)),
            case(konst(2), aff(0, 0, 2, 0, -2), aff(0, 0, 0, 1, 0), aff(2, 0, 2, 1, -4), aff(0, 2, 2, -1, -2)),
        ],
    },
    FormulaFamily {
        id: "r1-path",
        rule: ElementRule::PathEdge(R1),
        max_index: aff(0, 2, 0, 0, -2),
        cases: &[
            case(konst(1), konst(1), aff(2, 0, 2, 0, -3), aff(0, 0, 0, 1, -1), aff(2, 2, 0, -1, -3)),
            case(konst(2), aff(0, 2, 0, 0, -2), aff(2, 0, 2, 1, -5), aff(0, 0, 0, 1, -1), aff(2, 2, 0, -1, -3)),
        ],
    },
    FormulaFamily {
        id: "r2-path",
        rule: ElementRule::PathEdge(R2),
        max_index: aff(0, 2, 0, 0, -2),
        cases: &[
            case(konst(1), aff(0, 2, 0, 0, -3), aff(0, 0, 2, 1, -1), aff(2, 4, 0, -1, -6), aff(0, 2, 0, -1, -1)),
            case(aff(0, 2, 0, 0, -2), aff(0, 2, 0, 0, -2), aff(0, 0, 2, 1, -1), aff(2, 2, 0, 0, -3), aff(0, 2, 0, -1, -1)),
        ],
    },
    FormulaFamily {
        id: "s1-path",
        rule: ElementRule::PathEdge(S1),
        max_index: aff(2, 0, 0, 0, -4),
        cases: &[case(konst(1), aff(2, 0, 0, 0, -4), aff(0, 0, 0, 1, 1), aff(2, 0, 2, -1, -4), aff(0, 2, 2, 1, -4))],
    },
    FormulaFamily {
        id: "s2-path",
        rule: ElementRule::PathEdge(S2),
        max_index: aff(2, 0, 0, 0, -4),
        cases: &[case(konst(1), aff(2, 0, 0, 0, -4), aff(0, 2, 2, 1, -4), aff(2, 2, 0, -1, -5), aff(0, 0, 0, 1, 1))],
    },
    FormulaFamily {
        id: "t1-path",
        rule: ElementRule::PathEdge(T1),
        max_index: aff(0, 0, 2, 0, -4),
        cases: &[case(konst(1), aff(0, 0, 2, 0, -4), aff(2, 0, 0, 1, -2), aff(0, 0, 2, -1, -1), aff(2, 2, 2, -1, -8))],
    },
    FormulaFamily {
        id: "t2-path",
        rule: ElementRule::PathEdge(T2),
        max_index: aff(0, 2, 0, 0, -4),
        cases: &[case(konst(1), aff(0, 2, 0, 0, -4), aff(0, 0, 2, 1, -1), aff(2, 4, 0, -1, -8), aff(0, 2, 0, -1, -1))],
    },
    FormulaFamily {
        id: "u1-path",
        rule: ElementRule::PathEdge(U1),
        max_index: aff(0, 2, 0, 0, -4),
        cases: &[case(konst(1), aff(0, 2, 0, 0, -4), aff(2, 0, 2, 1, -5), aff(0, 0, 0, 1, 1), aff(2, 2, 0, -1, -5))],
    },
    FormulaFamily {
        id: "u2-path",
        rule: ElementRule::PathEdge(U2),
        max_index: aff(0, 0, 2, 0, -4),
        cases: &[case(konst(1), aff(0, 0, 2, 0, -4), aff(0, 0, 0, 1, 2), aff(2, 0, 2, 1, -4), aff(0, 2, 2, -1, -4))],
    },
];

/// Spoke-edge code families of the hollow coronoid.
#[rustfmt::skip]
pub const HC_SPOKE_FAMILIES: &[FormulaFamily] = &[
    FormulaFamily {
        id: "p1s1",
        rule: ElementRule::Spoke(P1, S1),
        max_index: aff(1, 0, 0, 0, -1),
        cases: &[case(konst(1), aff(1, 0, 0, 0, -1), aff(0, 0, 0, 2, -1), aff(4, 0, 2, -2, -12), aff(0, 4, 2, 2, -13))],
    },
    FormulaFamily {
        id: "p2s2",
        rule: ElementRule::Spoke(P2, S2),
        max_index: aff(1, 0, 0, 0, -1),
        cases: &[case(konst(1), aff(1, 0, 0, 0, -1), aff(0, 2, 4, 2, -13), aff(4, 2, 0, -2, -13), aff(0, 0, 0, 2, -1))],
    },
    FormulaFamily {
        id: "q1t1",
        rule: ElementRule::Spoke(Q1, T1),
        max_index: aff(0, 0, 1, 0, -1),
        cases: &[case(konst(1), aff(0, 0, 1, 0, -1), aff(4, 0, 0, 2, -13), aff(0, 0, 4, -2, -8), aff(4, 2, 2, -2, -16))],
    },
    FormulaFamily {
        id: "q2u2",
        rule: ElementRule::Spoke(Q2, U2),
        max_index: aff(0, 0, 1, 0, -1),
        cases: &[case(konst(1), aff(0, 0, 1, 0, -1), aff(0, 0, 0, 2, 0), aff(4, 0, 2, 2, -15), aff(0, 4, 2, -2, -10))],
    },
    FormulaFamily {
        id: "r1u1",
        rule: ElementRule::Spoke(R1, U1),
        max_index: aff(0, 1, 0, 0, -1),
        cases: &[case(konst(1), aff(0, 1, 0, 0, -1), aff(4, 0, 2, 2, -16), aff(0, 0, 0, 2, -1), aff(4, 2, 0, -2, -13))],
    },
    FormulaFamily {
        id: "r2t2",
        rule: ElementRule::Spoke(R2, T2),
        max_index: aff(0, 1, 0, 0, -1),
        cases: &[case(konst(1), aff(0, 1, 0, 0, -1), aff(0, 0, 4, 2, -10), aff(4, 4, 0, -2, -16), aff(0, 4, 0, -2, -8))],
    },
];

/// The twelve connector edges closing the outer and inner cycles, in
/// edge-set order, with their claimed code triples.
#[rustfmt::skip]
pub const HC_CONNECTOR_FAMILIES: &[FormulaFamily] = &[
    FormulaFamily {
        id: "conn1",
        rule: ElementRule::Connector((P1, konst(1)), (Q2, konst(1))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), konst(0), aff(2, 0, 2, 0, -2), aff(0, 2, 2, 0, -4))],
    },
    FormulaFamily {
        id: "conn2",
        rule: ElementRule::Connector((S1, konst(1)), (U2, konst(1))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), konst(2), aff(2, 0, 2, 0, -4), aff(0, 2, 2, 0, -6))],
    },
    FormulaFamily {
        id: "conn3",
        rule: ElementRule::Connector((P1, aff(2, 0, 0, 0, -1)), (Q1, konst(1))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(2, 0, 0, 0, -2), aff(0, 0, 2, 0, -1), aff(2, 2, 2, 0, -6))],
    },
    FormulaFamily {
        id: "conn4",
        rule: ElementRule::Connector((S1, aff(2, 0, 0, 0, -3)), (T1, konst(1))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(2, 0, 0, 0, -2), aff(0, 0, 2, 0, -1), aff(2, 2, 2, 0, -8))],
    },
    FormulaFamily {
        id: "conn5",
        rule: ElementRule::Connector((Q1, aff(0, 0, 2, 0, -1)), (R1, konst(1))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(2, 0, 2, 0, -3), konst(0), aff(2, 2, 0, 0, -3))],
    },
    FormulaFamily {
        id: "conn6",
        rule: ElementRule::Connector((T1, aff(0, 0, 2, 0, -3)), (U1, konst(1))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(2, 0, 2, 0, -5), konst(2), aff(2, 2, 0, 0, -5))],
    },
    FormulaFamily {
        id: "conn7",
        rule: ElementRule::Connector((R1, aff(0, 2, 0, 0, -1)), (P2, aff(2, 0, 0, 0, -1))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(2, 2, 2, 0, -6), aff(0, 2, 0, 0, -2), aff(2, 0, 0, 0, -2))],
    },
    FormulaFamily {
        id: "conn8",
        rule: ElementRule::Connector((U1, aff(0, 2, 0, 0, -3)), (S2, aff(2, 0, 0, 0, -3))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(2, 2, 2, 0, -8), aff(0, 2, 0, 0, -2), aff(2, 0, 0, 0, -2))],
    },
    FormulaFamily {
        id: "conn9",
        rule: ElementRule::Connector((P2, konst(1)), (R2, aff(0, 2, 0, 0, -1))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(0, 2, 2, 0, -2), aff(2, 2, 0, 0, -3), konst(0))],
    },
    FormulaFamily {
        id: "conn10",
        rule: ElementRule::Connector((S2, konst(1)), (T2, aff(0, 2, 0, 0, -3))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(0, 2, 2, 0, -4), aff(2, 2, 0, 0, -5), konst(2))],
    },
    FormulaFamily {
        id: "conn11",
        rule: ElementRule::Connector((R2, konst(1)), (Q2, aff(0, 0, 2, 0, -1))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(0, 0, 2, 0, -1), aff(2, 4, 0, 0, -6), aff(0, 2, 0, 0, -1))],
    },
    FormulaFamily {
        id: "conn12",
        rule: ElementRule::Connector((T2, konst(1)), (U2, aff(0, 0, 2, 0, -3))),
        max_index: konst(1),
        cases: &[case(konst(1), konst(1), aff(0, 0, 2, 0, -1), aff(2, 4, 0, 0, -8), aff(0, 2, 0, 0, -1))],
    },
];

/// Claimed multirepresentation families for the starphene. The p families
/// are indexed by `b`, the q families by `c`, and the r families by `a`.
#[rustfmt::skip]
pub const SP_VERTEX_FAMILIES: &[FormulaFamily] = &[
    FormulaFamily {
        id: "p1",
        rule: ElementRule::Vertex(P1),
        max_index: aff(0, 2, 0, 0, -1),
        cases: &[
            case(konst(1), aff(0, 2, 0, 0, -3), aff(0, 2, 0, -1, -1), aff(0, 2, 0, -1, -2), aff(0, 0, 0, 1, 1)),
            case(aff(0, 2, 0, 0, -2), aff(0, 2, 0, 0, -2), konst(1), konst(2), aff(0, 2, 0, 0, -1)),
            case(aff(0, 2, 0, 0, -1), aff(0, 2, 0, 0, -1), konst(0), konst(3), aff(0, 2, 0, 0, 0)),
        ],
    },
    FormulaFamily {
        id: "p2",
        rule: ElementRule::Vertex(P2),
        max_index: aff(0, 2, 0, 0, -1),
        cases: &[
            case(konst(1), aff(0, 2, 0, 0, -3), aff(0, 2, 0, -1, 0), aff(0, 2, 0, -1, -3), aff(0, 0, 0, 1, 2)),
            case(aff(0, 2, 0, 0, -2), aff(0, 2, 0, 0, -2), konst(2), konst(1), aff(0, 2, 0, 0, 0)),
            case(aff(0, 2, 0, 0, -1), aff(0, 2, 0, 0, -1), konst(1), konst(2), aff(0, 2, 0, 0, 1)),
        ],
    },
    FormulaFamily {
        id: "q1",
        rule: ElementRule::Vertex(Q1),
        max_index: aff(0, 0, 2, 0, -1),
        cases: &[case(konst(1), aff(0, 0, 2, 0, -1), aff(0, 2, 0, 1, -1), aff(0, 2, 0, 1, -4), aff(0, 0, 0, 1, 1))],
    },
    FormulaFamily {
        id: "q2",
        rule: ElementRule::Vertex(Q2),
        max_index: aff(0, 0, 2, 0, -1),
        cases: &[case(konst(1), aff(0, 0, 2, 0, -1), aff(0, 2, 0, 1, 0), aff(0, 2, 0, 1, -3), aff(0, 0, 0, 1, 0))],
    },
    FormulaFamily {
        id: "r1",
        rule: ElementRule::Vertex(R1),
        max_index: aff(2, 0, 0, 0, -1),
        cases: &[case(konst(1), aff(2, 0, 0, 0, -1), aff(0, 2, 0, 1, -1), aff(2, 0, 0, 1, -2), aff(0, 0, 0, 1, -1))],
    },
    FormulaFamily {
        id: "r2",
        rule: ElementRule::Vertex(R2),
        max_index: aff(2, 0, 0, 0, -1),
        cases: &[case(konst(1), aff(2, 0, 0, 0, -1), aff(0, 2, 0, 1, -2), aff(0, 2, 0, 1, -3), aff(0, 0, 0, 1, 0))],
    },
];

/// All hollow coronoid families in canonical report order: vertex families,
/// path edges, spokes, connectors.
pub fn hc_families() -> impl Iterator<Item = &'static FormulaFamily> {
    HC_VERTEX_FAMILIES
        .iter()
        .chain(HC_PATH_EDGE_FAMILIES)
        .chain(HC_SPOKE_FAMILIES)
        .chain(HC_CONNECTOR_FAMILIES)
}

pub fn hc_family(id: &str) -> Result<&'static FormulaFamily, AuditError> {
    hc_families()
        .find(|f| f.id == id)
        .ok_or_else(|| AuditError::UnknownFamily(id.to_string()))
}

pub fn sp_family(id: &str) -> Result<&'static FormulaFamily, AuditError> {
    SP_VERTEX_FAMILIES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| AuditError::UnknownFamily(id.to_string()))
}

/// Evaluates a claimed hollow-coronoid code triple verbatim.
pub fn hc_formula_code(
    family: &str,
    g: u32,
    a: u32,
    b: u32,
    c: u32,
) -> Result<[i64; 3], AuditError> {
    hc_family(family)?.evaluate(g, a, b, c)
}

/// Evaluates a claimed starphene multirepresentation triple verbatim (in the
/// printed coordinate order; sort it for multiset comparison).
pub fn sp_formula_multirep(
    family: &str,
    g: u32,
    a: u32,
    b: u32,
    c: u32,
) -> Result<[i64; 3], AuditError> {
    sp_family(family)?.evaluate(g, a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hc_p1_first_vertex() {
        assert_eq!(hc_formula_code("p1", 1, 4, 4, 4).unwrap(), [0, 14, 15]);
        assert_eq!(hc_formula_code("p1", 2, 4, 4, 4).unwrap(), [1, 13, 14]);
        assert_eq!(hc_formula_code("p1", 7, 4, 4, 4).unwrap(), [6, 8, 19]);
    }

    #[test]
    fn hc_connector_nine() {
        assert_eq!(hc_formula_code("conn9", 1, 4, 4, 4).unwrap(), [14, 13, 0]);
    }

    #[test]
    fn hc_connector_five() {
        assert_eq!(hc_formula_code("conn5", 1, 4, 4, 4).unwrap(), [13, 0, 13]);
    }

    #[test]
    fn hc_spoke_p1s1_first_as_claimed() {
        // the claimed value, which disagrees with the reference table's (1,12,13)
        assert_eq!(hc_formula_code("p1s1", 1, 4, 4, 4).unwrap(), [1, 10, 13]);
    }

    #[test]
    fn sp_q2_first_vertex() {
        assert_eq!(sp_formula_multirep("q2", 1, 3, 3, 3).unwrap(), [7, 4, 1]);
    }

    #[test]
    fn sp_p1_terminal_vertex() {
        let b = 3;
        assert_eq!(
            sp_formula_multirep("p1", 2 * b - 1, 3, b, 3).unwrap(),
            [0, 3, 2 * b as i64]
        );
    }

    #[test]
    fn sp_r1_first_vertex() {
        let (a, b) = (3u32, 3u32);
        assert_eq!(
            sp_formula_multirep("r1", 1, a, b, 3).unwrap(),
            [2 * b as i64, 2 * a as i64 - 1, 0]
        );
    }

    #[test]
    fn out_of_range_indices_are_rejected() {
        assert!(matches!(
            hc_formula_code("p1", 8, 4, 4, 4),
            Err(AuditError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            hc_formula_code("p1", 0, 4, 4, 4),
            Err(AuditError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            hc_formula_code("nope", 1, 4, 4, 4),
            Err(AuditError::UnknownFamily(_))
        ));
    }

    #[test]
    fn case_ranges_partition_every_family_range() {
        for a in 2..=6 {
            for b in 2..=6 {
                for c in 2..=6 {
                    for fam in hc_families() {
                        assert_partition(fam, a, b, c);
                    }
                }
            }
        }
        for a in 1..=5 {
            for b in 1..=5 {
                for c in 1..=5 {
                    for fam in SP_VERTEX_FAMILIES {
                        assert_partition(fam, a, b, c);
                    }
                }
            }
        }
    }

    fn assert_partition(fam: &FormulaFamily, a: u32, b: u32, c: u32) {
        let max = fam.max_index(a, b, c);
        for g in 1..=max.max(0) {
            let covering = fam
                .cases
                .iter()
                .filter(|case| {
                    let lo = case.lo.eval(a as i64, b as i64, c as i64, 0);
                    let hi = case.hi.eval(a as i64, b as i64, c as i64, 0);
                    lo <= g && g <= hi
                })
                .count();
            assert_eq!(
                covering, 1,
                "family {} index {g} at ({a},{b},{c}) covered {covering} times",
                fam.id
            );
        }
    }

    #[test]
    fn q1_path_cases_agree_only_at_the_shared_boundary() {
        // where the printed ranges overlapped, the two expressions coincide
        // only at g = 2c-3; everywhere else they conflict
        let (a, b, c) = (4i64, 4i64, 4i64);
        let fam = hc_family("q1-path").unwrap();
        let first = fam.cases[0].code;
        let second = fam.cases[1].code;
        for g in 2..=(2 * c - 3) {
            let x: Vec<i64> = first.iter().map(|e| e.eval(a, b, c, g)).collect();
            let y: Vec<i64> = second.iter().map(|e| e.eval(a, b, c, g)).collect();
            if g == 2 * c - 3 {
                assert_eq!(x, y);
            } else {
                assert_ne!(x, y);
            }
        }
    }
}
