//! Certificate wire format and an independent checker.
//!
//! The checker re-derives everything from the definitions: it rebuilds the
//! oriented host from the bit string and compares arc relations and shadow
//! distances pair by pair. It shares nothing with the search code.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::distance::distance_matrix;
use crate::embedding::{EmbeddingCertificate, Variant};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::io::{from_graph6, to_graph6};
use crate::orientation::{bits_to_hex, hex_to_bits};

/// JSON layout of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateWire {
    pub pattern: Digraph,
    pub host_graph6: String,
    pub orientation_bits: String,
    pub map: Vec<usize>,
    pub variant: Variant,
}

impl From<&EmbeddingCertificate> for CertificateWire {
    fn from(c: &EmbeddingCertificate) -> Self {
        CertificateWire {
            pattern: c.pattern.clone(),
            host_graph6: to_graph6(&c.host),
            orientation_bits: bits_to_hex(&c.bits),
            map: c.map.clone(),
            variant: c.variant,
        }
    }
}

impl TryFrom<CertificateWire> for EmbeddingCertificate {
    type Error = Error;
    fn try_from(w: CertificateWire) -> Result<Self> {
        let host = from_graph6(&w.host_graph6)?;
        let bits = hex_to_bits(&w.orientation_bits, host.size())?;
        Ok(EmbeddingCertificate {
            pattern: w.pattern,
            host,
            bits,
            map: w.map,
            variant: w.variant,
        })
    }
}

impl Serialize for EmbeddingCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for EmbeddingCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = CertificateWire::deserialize(d)?;
        EmbeddingCertificate::try_from(w).map_err(serde::de::Error::custom)
    }
}

/// Why a certificate fails its predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Invalid {
    MapLength { expected: usize, found: usize },
    OutOfRange { vertex: usize, image: usize },
    NotInjective { u: usize, v: usize, image: usize },
    BitsLength { expected: usize, found: usize },
    /// Pattern arc relation on `(u, v)` differs from the host's on the images.
    ArcMismatch { u: usize, v: usize },
    /// Pattern arc `(u, v)` has no host arc under the map.
    MissingArc { u: usize, v: usize },
    DistanceMismatch { u: usize, v: usize, pattern: String, host: String },
}

impl fmt::Display for Invalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invalid::MapLength { expected, found } => {
                write!(f, "map has {found} entries, pattern has {expected} vertices")
            }
            Invalid::OutOfRange { vertex, image } => {
                write!(f, "vertex {vertex} maps to {image}, outside the host")
            }
            Invalid::NotInjective { u, v, image } => {
                write!(f, "vertices {u} and {v} both map to {image}")
            }
            Invalid::BitsLength { expected, found } => {
                write!(f, "orientation has {found} bits, host has {expected} edges")
            }
            Invalid::ArcMismatch { u, v } => write!(f, "arc mismatch on pattern pair ({u}, {v})"),
            Invalid::MissingArc { u, v } => write!(f, "pattern arc ({u}, {v}) is not a host arc"),
            Invalid::DistanceMismatch { u, v, pattern, host } => write!(
                f,
                "distance mismatch on ({u}, {v}): pattern {pattern}, host {host}"
            ),
        }
    }
}

impl std::error::Error for Invalid {}

/// Checks `cert` against the predicate of its own variant.
pub fn verify(cert: &EmbeddingCertificate) -> std::result::Result<(), Invalid> {
    verify_as(cert, cert.variant)
}

/// Checks `cert` against the predicate of `variant`, whatever it claims.
pub fn verify_as(cert: &EmbeddingCertificate, variant: Variant) -> std::result::Result<(), Invalid> {
    let p = &cert.pattern;
    let g = &cert.host;
    let n = p.order();
    if cert.map.len() != n {
        return Err(Invalid::MapLength {
            expected: n,
            found: cert.map.len(),
        });
    }
    if cert.bits.len() != g.size() {
        return Err(Invalid::BitsLength {
            expected: g.size(),
            found: cert.bits.len(),
        });
    }
    for (vertex, &image) in cert.map.iter().enumerate() {
        if image >= g.order() {
            return Err(Invalid::OutOfRange { vertex, image });
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if cert.map[u] == cert.map[v] {
                return Err(Invalid::NotInjective {
                    u,
                    v,
                    image: cert.map[u],
                });
            }
        }
    }

    // Host arc relation straight from the bit string.
    let hn = g.order();
    let mut arc = vec![false; hn * hn];
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if cert.bits.contains(i) {
            arc[b * hn + a] = true;
        } else {
            arc[a * hn + b] = true;
        }
    }
    let host_arc = |x: usize, y: usize| arc[x * hn + y];

    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let (fu, fv) = (cert.map[u], cert.map[v]);
            match variant {
                Variant::Weak => {
                    if p.has_arc(u, v) && !host_arc(fu, fv) {
                        return Err(Invalid::MissingArc { u, v });
                    }
                }
                Variant::Oriented | Variant::Isometric => {
                    if p.has_arc(u, v) != host_arc(fu, fv) {
                        return Err(Invalid::ArcMismatch { u, v });
                    }
                }
            }
        }
    }

    if variant == Variant::Isometric {
        let dp = distance_matrix(&p.shadow());
        let dh = distance_matrix(g);
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (dp.get(u, v), dh.get(cert.map[u], cert.map[v]));
                if a != b {
                    return Err(Invalid::DistanceMismatch {
                        u,
                        v,
                        pattern: a.to_string(),
                        host: b.to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}
