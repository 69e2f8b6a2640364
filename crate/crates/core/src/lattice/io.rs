//! Polygon text formats.
//!
//! Plain form: one vertex per line as two whitespace-separated integers, `#` starts a
//! comment. Structured form: a JSON array `[[x,y],...]`. Both reject duplicate vertices.

use std::collections::HashMap;

use super::{LatticePoint, LatticePolygon};
use crate::error::{Error, Result};

pub fn parse_polygon(text: &str) -> Result<LatticePolygon> {
    if text.trim_start().starts_with('[') {
        return parse_json(text);
    }
    let mut seen: HashMap<LatticePoint, usize> = HashMap::new();
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse { line, msg: format!("expected two integers, found {:?}", content) });
        }
        let coord = |s: &str| {
            s.parse::<i64>().map_err(|_| Error::Parse { line, msg: format!("not an integer: {s:?}") })
        };
        let p = LatticePoint::new(coord(fields[0])?, coord(fields[1])?);
        if let Some(first) = seen.insert(p, line) {
            return Err(Error::Parse { line, msg: format!("duplicate vertex {p} (first on line {first})") });
        }
        points.push(p);
    }
    LatticePolygon::new(points)
}

fn parse_json(text: &str) -> Result<LatticePolygon> {
    let raw: Vec<[i64; 2]> =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    let mut seen = std::collections::HashSet::new();
    for &v in &raw {
        if !seen.insert(v) {
            return Err(Error::Parse {
                line: 1,
                msg: format!("duplicate vertex {}", LatticePoint::from(v)),
            });
        }
    }
    LatticePolygon::new(raw.into_iter().map(LatticePoint::from))
}

pub fn format_polygon(polygon: &LatticePolygon) -> String {
    polygon.vertices().iter().map(|v| format!("{} {}\n", v.x, v.y)).collect()
}

pub fn polygon_to_json(polygon: &LatticePolygon) -> String {
    serde_json::to_string(polygon).expect("polygon serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_format_with_comments() {
        let p = parse_polygon("# square\n1 1\n-1 1 # top left\n\n-1 -1\n1 -1\n").unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(parse_polygon(&format_polygon(&p)).unwrap(), p);
    }

    #[test]
    fn json_format() {
        let p = parse_polygon("[[1,-1],[3,1],[-1,0]]").unwrap();
        assert_eq!(polygon_to_json(&p), "[[-1,0],[1,-1],[3,1]]");
        assert_eq!(parse_polygon(&polygon_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn errors_carry_line_numbers() {
        match parse_polygon("1 0\n0 1\nfoo 2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_polygon("1 0\n0 1\n-1 -1\n1 0\n") {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 4);
                assert!(msg.contains("duplicate"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polygon("[[1,0],[0,1],[1,0],[-1,-1]]").is_err());
        assert!(parse_polygon("1 2 3\n").is_err());
    }
}
