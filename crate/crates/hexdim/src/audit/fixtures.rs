//! Embedded reference code tables for HC(4,4,4), shipped as CSV data files.
//!
//! Layout: `element_kind,family,index[,index2],c1,c2,c3`. Comment lines start
//! with `#`; a `# note:` comment (plus any immediately following comment
//! lines) attaches to the next data row.

use super::AuditError;

pub const HC444_VERTEX_CODES: &str = include_str!("../../data/hc444_vertex_codes.csv");
pub const HC444_EDGE_CODES: &str = include_str!("../../data/hc444_edge_codes.csv");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Vertex,
    Edge,
}

#[derive(Clone, Debug)]
pub struct FixtureRow {
    pub kind: FixtureKind,
    pub family: String,
    pub index: u32,
    pub index2: Option<u32>,
    pub code: [i64; 3],
    pub note: Option<String>,
}

/// Loads the HC(4,4,4) vertex and edge reference rows, in file order.
pub fn load_hc444_fixtures() -> Result<Vec<FixtureRow>, AuditError> {
    let mut rows = parse_fixture_csv(HC444_VERTEX_CODES)?;
    rows.extend(parse_fixture_csv(HC444_EDGE_CODES)?);
    Ok(rows)
}

fn parse_fixture_csv(text: &str) -> Result<Vec<FixtureRow>, AuditError> {
    let mut rows = Vec::new();
    let mut pending_note: Option<String> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(note) = rest.strip_prefix("note:") {
                pending_note = Some(note.trim().to_string());
            } else if let Some(note) = pending_note.as_mut() {
                note.push(' ');
                note.push_str(rest);
            }
            continue;
        }

        let err = |msg: String| AuditError::Fixture { line: line_no, msg };
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(err(format!("expected 7 fields, got {}", fields.len())));
        }
        let kind = match fields[0] {
            "vertex" => FixtureKind::Vertex,
            "edge" => FixtureKind::Edge,
            other => return Err(err(format!("unknown element kind {other:?}"))),
        };
        let family = fields[1].to_string();
        let index: u32 = fields[2]
            .parse()
            .map_err(|_| err(format!("bad index {:?}", fields[2])))?;
        let index2: Option<u32> = if fields[3].is_empty() {
            None
        } else {
            Some(
                fields[3]
                    .parse()
                    .map_err(|_| err(format!("bad index2 {:?}", fields[3])))?,
            )
        };
        let mut code = [0i64; 3];
        for (slot, field) in code.iter_mut().zip(&fields[4..7]) {
            *slot = field
                .parse()
                .map_err(|_| err(format!("bad code entry {field:?}")))?;
        }
        rows.push(FixtureRow {
            kind,
            family,
            index,
            index2,
            code,
            note: pending_note.take(),
        });
    }
    Ok(rows)
}
