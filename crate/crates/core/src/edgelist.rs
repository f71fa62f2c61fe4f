//! Plain-text edge lists, one graph per line: `n : u-v u-v ...` with
//! 1-indexed vertices, e.g. `4 : 1-2 2-3 3-4 4-1`.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn format(g: &Graph) -> String {
    let mut s = format!("{} :", g.n());
    for e in g.edges() {
        s.push(' ');
        s.push_str(&e.to_string());
    }
    s
}

pub fn parse(line: &str) -> Result<Graph> {
    let (head, body) = line
        .split_once(':')
        .ok_or_else(|| Error::InvalidInput(format!("edge list needs `n : edges`, got {line:?}")))?;
    let n: usize = head.trim().parse().map_err(|_| Error::InvalidInput(format!("bad vertex count {:?}", head.trim())))?;
    let mut edges = Vec::new();
    for tok in body.split_whitespace() {
        let bad = || Error::InvalidInput(format!("bad edge {tok:?}"));
        let (a, b) = tok.split_once('-').ok_or_else(bad)?;
        let a: usize = a.parse().map_err(|_| bad())?;
        let b: usize = b.parse().map_err(|_| bad())?;
        if a == 0 || b == 0 {
            return Err(Error::InvalidInput(format!("edge {tok:?}: vertices are numbered from 1")));
        }
        edges.push((a - 1, b - 1));
    }
    Graph::from_edges(n, edges)
}

/// Parses every non-blank line, reporting the 1-based line number of the first failure.
pub fn parse_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse(l).map_err(|e| (i + 1, e)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn round_trip() {
        assert_eq!(format(&cycle(4)), "4 : 1-2 1-4 2-3 3-4");
        assert_eq!(parse("4 : 1-2 2-3 3-4 4-1").unwrap(), cycle(4));
        assert_eq!(parse(&format(&petersen())).unwrap(), petersen());
        assert_eq!(parse("3 :").unwrap(), Graph::empty(3).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("4 1-2").is_err());
        assert!(parse("4 : 0-1").is_err());
        assert!(parse("4 : 1-5").is_err());
        assert!(matches!(parse("4 : 2-2"), Err(Error::LoopRejected(1))));
        assert_eq!(parse_lines("2 : 1-2\n\nx : 1-2\n").unwrap_err().0, 3);
    }
}
