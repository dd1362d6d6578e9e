//! graph6 and plain edge-list formats.
//!
//! Edge lists are a header line `n m` followed by `m` lines `u v`. The same
//! layout is used for oriented graphs, where each line is an arc `u -> v`.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

const HEADER: &str = ">>graph6<<";

fn push_order(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` as a graph6 line (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_order(&mut out, n);
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line. An optional `>>graph6<<` header is accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let line = s.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse("", "empty graph6 string"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(
                &line[i..(i + 1).min(line.len())],
                format!("byte {b} at offset {i} outside graph6 range 63..=126"),
            ));
        }
    }
    let take = |from: usize, count: usize| -> Result<usize> {
        let slice = bytes
            .get(from..from + count)
            .ok_or_else(|| Error::parse(line, "truncated vertex count"))?;
        Ok(slice.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        (take(1, 3)?, 4)
    } else {
        (take(2, 6)?, 8)
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let body = &bytes[pos.min(bytes.len())..];
    if body.len() != need {
        let token = if body.len() > need {
            &line[pos + need..]
        } else {
            line
        };
        return Err(Error::parse(
            token,
            format!("expected {need} adjacency bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit / 6] - 63;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == pairs {
                break 'outer;
            }
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for &(a, b) in g.edges() {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}

pub fn to_arc_list(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.order(), d.arcs().len());
    for &(a, b) in d.arcs() {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}

fn parse_pairs(s: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut tokens = s.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = tokens
            .next()
            .ok_or_else(|| Error::parse("<eof>", format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| Error::parse(tok, format!("expected integer {what}")))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let a = next("endpoint")?;
        let b = next("endpoint")?;
        pairs.push((a, b));
    }
    if let Some(extra) = tokens.next() {
        return Err(Error::parse(extra, "trailing data after the declared edges"));
    }
    Ok((n, pairs))
}

pub fn from_edge_list(s: &str) -> Result<Graph> {
    let (n, pairs) = parse_pairs(s)?;
    for &(a, b) in &pairs {
        if a >= n || b >= n || a == b {
            return Err(Error::parse(format!("{a} {b}"), "bad edge"));
        }
    }
    Graph::from_edges(n, pairs)
}

pub fn from_arc_list(s: &str) -> Result<Digraph> {
    let (n, pairs) = parse_pairs(s)?;
    for &(a, b) in &pairs {
        if a >= n || b >= n || a == b {
            return Err(Error::parse(format!("{a} {b}"), "bad arc"));
        }
    }
    Digraph::from_arcs(n, pairs)
}
