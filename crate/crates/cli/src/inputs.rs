//! Graph, digraph and family arguments: builtin names or files.

use std::collections::BTreeMap;
use std::path::Path;

use sha2::{Digest, Sha256};

use oriray::catalog::{directed_path, enumerate_oriented_trees};
use oriray::graph::{complete, cycle, path, petersen, rectangular_product, Digraph, Graph};
use oriray::io::{from_arc_list, from_edge_list, from_graph6};
use oriray::Error;

/// SHA-256 digests of every input, keyed by argument name.
#[derive(Default)]
pub struct Digests(pub BTreeMap<String, String>);

impl Digests {
    fn record(&mut self, arg: &str, bytes: &[u8]) {
        self.0.insert(arg.to_string(), hex::encode(Sha256::digest(bytes)));
    }
}

fn read(arg: &str, token: &str, digests: &mut Digests) -> Result<Option<String>, Error> {
    let p = Path::new(token);
    if !p.is_file() {
        return Ok(None);
    }
    let bytes = std::fs::read(p).map_err(|e| Error::Invalid(format!("cannot read {token}: {e}")))?;
    digests.record(arg, &bytes);
    String::from_utf8(bytes)
        .map(Some)
        .map_err(|_| Error::Parse {
            token: token.to_string(),
            reason: "file is not UTF-8".into(),
        })
}

fn number(token: &str, rest: &str) -> Result<usize, Error> {
    rest.parse().map_err(|_| Error::Parse {
        token: token.to_string(),
        reason: "expected a size after the family letter".into(),
    })
}

fn atom(token: &str) -> Result<Graph, Error> {
    match token {
        "petersen" => return Ok(petersen()),
        "prism" => return Ok(rectangular_product(&complete(2)?, &complete(3)?)),
        _ => {}
    }
    let mut chars = token.chars();
    let head = chars.next();
    let rest = chars.as_str();
    match head {
        Some('C') => cycle(number(token, rest)?),
        Some('K') => complete(number(token, rest)?),
        Some('P') => path(number(token, rest)?),
        Some('E') => Ok(Graph::empty(number(token, rest)?)),
        _ => Err(Error::Parse {
            token: token.to_string(),
            reason: "not a file and not a builtin graph (C<n>, K<n>, P<n>, E<n>, petersen, prism, or products AxB)".into(),
        }),
    }
}

/// A graph from a `.g6`/`.el` file or a builtin such as `C5`, `K2xK3`.
pub fn graph(arg: &str, token: &str, digests: &mut Digests) -> Result<Graph, Error> {
    if let Some(text) = read(arg, token, digests)? {
        return if token.ends_with(".el") || token.ends_with(".txt") {
            from_edge_list(&text)
        } else {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            from_graph6(line.trim())
        };
    }
    digests.record(arg, token.as_bytes());
    let mut parts = token.split('x');
    let first = atom(parts.next().unwrap_or(""))?;
    parts.try_fold(first, |g, t| Ok(rectangular_product(&g, &atom(t)?)))
}

/// A digraph from an arc-list file or `I<n>`.
pub fn digraph(arg: &str, token: &str, digests: &mut Digests) -> Result<Digraph, Error> {
    if let Some(text) = read(arg, token, digests)? {
        return from_arc_list(&text);
    }
    digests.record(arg, token.as_bytes());
    match token.strip_prefix('I') {
        Some(rest) => directed_path(number(token, rest)?),
        None => Err(Error::Parse {
            token: token.to_string(),
            reason: "not a file and not I<n>".into(),
        }),
    }
}

/// `I<n>`, `T<n>`, or a file of arc lists separated by blank lines.
pub fn family(arg: &str, token: &str, digests: &mut Digests) -> Result<Vec<Digraph>, Error> {
    if let Some(text) = read(arg, token, digests)? {
        let mut out = Vec::new();
        let mut block = String::new();
        for line in text.lines().chain(std::iter::once("")) {
            if line.trim().is_empty() {
                if !block.trim().is_empty() {
                    out.push(from_arc_list(&block)?);
                }
                block.clear();
            } else {
                block.push_str(line);
                block.push('\n');
            }
        }
        return Ok(out);
    }
    digests.record(arg, token.as_bytes());
    if let Some(rest) = token.strip_prefix('I') {
        return Ok(vec![directed_path(number(token, rest)?)?]);
    }
    if let Some(rest) = token.strip_prefix('T') {
        return Ok(enumerate_oriented_trees(number(token, rest)?)?
            .into_iter()
            .map(|t| t.into_digraph())
            .collect());
    }
    Err(Error::Parse {
        token: token.to_string(),
        reason: "not a file and not I<n> or T<n>".into(),
    })
}

/// Comma-separated reals.
pub fn reals(token: &str) -> Result<Vec<f64>, Error> {
    token
        .split(',')
        .map(|t| {
            t.trim().parse::<f64>().map_err(|_| Error::Parse {
                token: t.to_string(),
                reason: "expected a number".into(),
            })
        })
        .collect()
}
