//! graph6 (short form, `n <= 62`) and a plain edge-list text format.
//!
//! graph6 layout: one byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), …`),
//! packed six bits per byte, most significant bit first, zero-padded, each
//! byte offset by 63.
//!
//! Edge list: a header line `n <count>`, then one `u v` pair per line with
//! 0-based ids. Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
pub const GRAPH6_MAX_ORDER: usize = 62;

fn g6_err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let text = line.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(format!(
            "character at position {pos} is out of range"
        )));
    }
    let (&first, body) = bytes.split_first().ok_or_else(|| g6_err("empty input"))?;
    if first == 126 {
        return Err(g6_err("long-form size prefix (n > 62) is not supported"));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(g6_err("non-zero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(g6_err(format!(
            "order {n} needs the long form, which is not supported"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line, message: String| Error::EdgeList { line, message };
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|e| err(line_no, format!("bad vertex count: {e}")))?,
        _ => {
            return Err(err(
                line_no,
                format!("expected `n <count>`, found {header:?}"),
            ))
        }
    };
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let ids = line
            .split_whitespace()
            .map(str::parse::<usize>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| err(line_no, format!("bad vertex id: {e}")))?;
        let [u, v] = ids[..] else {
            return Err(err(line_no, format!("expected two ids, found {line:?}")));
        };
        if u >= n || v >= n {
            return Err(err(line_no, format!("vertex {} out of range", u.max(v))));
        }
        if u == v {
            return Err(err(line_no, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

/// True when the first non-empty line is a single graph6 token.
pub fn looks_like_graph6(text: &str) -> bool {
    let Some(line) = text.lines().map(str::trim).find(|l| !l.is_empty()) else {
        return false;
    };
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    !line.is_empty() && line.bytes().all(|b| (63..=126).contains(&b))
}

pub fn parse_graph(text: &str, format: InputFormat) -> Result<Graph> {
    let graph6 = match format {
        InputFormat::Graph6 => true,
        InputFormat::EdgeList => false,
        InputFormat::Auto => looks_like_graph6(text),
    };
    if graph6 {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .unwrap_or("");
        parse_graph6(line)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, path, random_graph};
    use proptest::prelude::*;

    #[test]
    fn graph6_examples() {
        assert_eq!(parse_graph6("C~").unwrap(), complete(4).unwrap());
        assert_eq!(parse_graph6("Ch").unwrap(), path(4).unwrap());
        assert_eq!(parse_graph6("@").unwrap(), complete(1).unwrap());
        assert_eq!(
            parse_graph6(">>graph6<<C~\n").unwrap(),
            complete(4).unwrap()
        );
        assert_eq!(encode_graph6(&complete(1).unwrap()).unwrap(), "@");
        assert_eq!(encode_graph6(&complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(encode_graph6(&path(4).unwrap()).unwrap(), "Ch");
        assert_eq!(encode_graph6(&Graph::new(0, []).unwrap()).unwrap(), "?");
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err()); // missing data byte
        assert!(parse_graph6("C~~").is_err()); // extra byte
        assert!(parse_graph6("B_").is_ok());
        assert!(parse_graph6("B`").is_err()); // n=3 uses 3 bits; padding set
        assert!(parse_graph6("C ").is_err());
        assert!(parse_graph6("~?@").is_err());
        assert!(encode_graph6(&path(63).unwrap()).is_err());
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("n 2\n0 1").unwrap(), complete(2).unwrap());
        assert_eq!(parse_edge_list("n 3\n0 1\n1 2").unwrap(), path(3).unwrap());
        assert_eq!(parse_edge_list("n 1").unwrap(), complete(1).unwrap());
        assert_eq!(
            parse_edge_list("# comment\nn 3 # three\n\n0 1 # e\n2 1\n").unwrap(),
            path(3).unwrap()
        );
        assert!(matches!(
            parse_edge_list("3\n0 1"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n0 2"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n 2\n1 1"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(parse_edge_list("n 2\n0").is_err());
    }

    #[test]
    fn autodetect() {
        assert!(looks_like_graph6("C~\n"));
        assert!(!looks_like_graph6("n 3\n0 1\n"));
        assert_eq!(
            parse_graph("Ch", InputFormat::Auto).unwrap(),
            path(4).unwrap()
        );
        assert_eq!(
            parse_graph("n 2\n0 1\n", InputFormat::Auto).unwrap(),
            complete(2).unwrap()
        );
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..=62, seed in any::<u64>()) {
            let g = random_graph(n, seed);
            let line = encode_graph6(&g).unwrap();
            prop_assert_eq!(parse_graph6(&line).unwrap(), g);
            prop_assert_eq!(encode_graph6(&parse_graph6(&line).unwrap()).unwrap(), line);
        }

        #[test]
        fn edge_list_round_trip(n in 1usize..=20, seed in any::<u64>()) {
            let g = random_graph(n, seed);
            prop_assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
        }
    }
}
