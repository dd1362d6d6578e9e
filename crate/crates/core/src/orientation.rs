//! Orientations of a host graph as bit strings over its sorted edge list.
//!
//! Bit `i` describes edge `edges()[i] = (a, b)` with `a < b`: `false` is the
//! arc `a -> b`, `true` is `b -> a`.

use fixedbitset::FixedBitSet;
use rand::Rng;

use crate::error::{ensure_cap, Error, Result};
use crate::graph::{Digraph, Graph};

/// Default cap on edge count for full orientation enumeration.
pub const ENUM_EDGE_CAP: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation<'g> {
    host: &'g Graph,
    bits: FixedBitSet,
}

impl<'g> Orientation<'g> {
    pub fn new(host: &'g Graph, bits: FixedBitSet) -> Result<Self> {
        if bits.len() != host.size() {
            return Err(Error::invalid(format!(
                "orientation has {} bits, host has {} edges",
                bits.len(),
                host.size()
            )));
        }
        Ok(Orientation { host, bits })
    }

    /// Every edge oriented from its smaller endpoint.
    pub fn canonical(host: &'g Graph) -> Self {
        Orientation {
            host,
            bits: FixedBitSet::with_capacity(host.size()),
        }
    }

    pub fn from_bools(host: &'g Graph, flags: &[bool]) -> Result<Self> {
        let mut bits = FixedBitSet::with_capacity(flags.len());
        for (i, &f) in flags.iter().enumerate() {
            bits.set(i, f);
        }
        Orientation::new(host, bits)
    }

    /// Orients every host edge to agree with `d`, which must orient exactly the host's edges.
    pub fn from_digraph(host: &'g Graph, d: &Digraph) -> Result<Self> {
        if d.order() != host.order() || d.arcs().len() != host.size() {
            return Err(Error::invalid("digraph is not an orientation of the host"));
        }
        let mut bits = FixedBitSet::with_capacity(host.size());
        for (i, &(a, b)) in host.edges().iter().enumerate() {
            if d.has_arc(b, a) {
                bits.insert(i);
            } else if !d.has_arc(a, b) {
                return Err(Error::invalid(format!("edge {{{a},{b}}} has no arc")));
            }
        }
        Ok(Orientation { host, bits })
    }

    pub fn random<R: Rng + ?Sized>(host: &'g Graph, rng: &mut R) -> Self {
        let mut bits = FixedBitSet::with_capacity(host.size());
        for i in 0..host.size() {
            bits.set(i, rng.gen());
        }
        Orientation { host, bits }
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn flip(&mut self, edge: usize) {
        self.bits.toggle(edge);
    }

    /// The arc on edge `i`.
    #[inline]
    pub fn arc(&self, i: usize) -> (usize, usize) {
        let (a, b) = self.host.edges()[i];
        if self.bits.contains(i) {
            (b, a)
        } else {
            (a, b)
        }
    }

    /// True when `{u, v}` is a host edge oriented `u -> v`.
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        match self.host.edge_index(u, v) {
            Some(i) => self.arc(i) == (u, v),
            None => false,
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.host.size()).map(move |i| self.arc(i))
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::from_arcs(self.host.order(), self.arcs()).expect("an orientation is an oriented graph")
    }

    pub fn reversed(&self) -> Orientation<'g> {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Orientation {
            host: self.host,
            bits,
        }
    }

    pub fn to_hex(&self) -> String {
        bits_to_hex(&self.bits)
    }

    pub fn from_hex(host: &'g Graph, hex: &str) -> Result<Self> {
        Orientation::new(host, hex_to_bits(hex, host.size())?)
    }
}

/// Hex over the bit string read left to right: each digit holds four
/// consecutive edges with the earliest edge in the most significant position.
/// The final digit is zero-padded. An empty bit string is the empty string.
pub fn bits_to_hex(bits: &FixedBitSet) -> String {
    let m = bits.len();
    let mut s = String::with_capacity(m.div_ceil(4));
    for chunk in 0..m.div_ceil(4) {
        let mut nibble = 0u32;
        for k in 0..4 {
            let i = chunk * 4 + k;
            nibble = (nibble << 1) | (i < m && bits.contains(i)) as u32;
        }
        s.push(char::from_digit(nibble, 16).unwrap());
    }
    s
}

pub fn hex_to_bits(hex: &str, m: usize) -> Result<FixedBitSet> {
    let hex = hex.trim();
    if hex.len() != m.div_ceil(4) {
        return Err(Error::parse(
            hex,
            format!("expected {} hex digits for {m} edges", m.div_ceil(4)),
        ));
    }
    let mut bits = FixedBitSet::with_capacity(m);
    for (chunk, ch) in hex.chars().enumerate() {
        let nibble = ch
            .to_digit(16)
            .ok_or_else(|| Error::parse(ch.to_string(), "not a hex digit"))?;
        for k in 0..4 {
            let i = chunk * 4 + k;
            let set = nibble & (8 >> k) != 0;
            if i >= m {
                if set {
                    return Err(Error::parse(ch.to_string(), "padding bits must be zero"));
                }
            } else {
                bits.set(i, set);
            }
        }
    }
    Ok(bits)
}

/// Lexicographic stream of orientations extending a fixed prefix.
///
/// The bit string `b_0 b_1 ... b_{m-1}` is read as a binary number with
/// `b_0` most significant; orientations come out in increasing order.
pub struct Orientations<'g> {
    host: &'g Graph,
    prefix: Vec<bool>,
    next: u64,
    end: u64,
}

impl<'g> Orientations<'g> {
    pub fn len(&self) -> u64 {
        self.end - self.next
    }

    pub fn is_empty(&self) -> bool {
        self.next == self.end
    }
}

impl<'g> Iterator for Orientations<'g> {
    type Item = Orientation<'g>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next == self.end {
            return None;
        }
        let x = self.next;
        self.next += 1;
        Some(Orientation {
            host: self.host,
            bits: suffix_bits(self.host.size(), &self.prefix, x),
        })
    }
}

/// Bits for the orientation whose free suffix (after `prefix`) has rank `x`.
pub(crate) fn suffix_bits(m: usize, prefix: &[bool], x: u64) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(m);
    for (i, &p) in prefix.iter().enumerate() {
        bits.set(i, p);
    }
    let free = m - prefix.len();
    for j in 0..free {
        if (x >> (free - 1 - j)) & 1 == 1 {
            bits.insert(prefix.len() + j);
        }
    }
    bits
}

pub fn enumerate_orientations<'g>(g: &'g Graph, prefix: &[bool]) -> Result<Orientations<'g>> {
    enumerate_orientations_capped(g, prefix, ENUM_EDGE_CAP)
}

pub fn enumerate_orientations_capped<'g>(
    g: &'g Graph,
    prefix: &[bool],
    cap: usize,
) -> Result<Orientations<'g>> {
    if prefix.len() > g.size() {
        return Err(Error::invalid("prefix longer than the edge list"));
    }
    let free = g.size() - prefix.len();
    ensure_cap("orientation enumeration edges", free as u64, cap.min(63) as u64)?;
    Ok(Orientations {
        host: g,
        prefix: prefix.to_vec(),
        next: 0,
        end: 1u64 << free,
    })
}
