//! Backtracking search for embeddings of a pattern digraph into an oriented host.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::distance::distance_matrix;
use crate::graph::{Digraph, Graph};
use crate::orientation::Orientation;

/// Which arrow relation a certificate witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Induced copy with matching arc directions.
    Oriented,
    /// Oriented copy that also preserves host-shadow distances.
    Isometric,
    /// Every pattern arc lands on a host arc; nothing else is required.
    Weak,
}

impl std::str::FromStr for Variant {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "oriented" => Ok(Variant::Oriented),
            "isometric" => Ok(Variant::Isometric),
            "weak" => Ok(Variant::Weak),
            other => Err(crate::Error::parse(other, "variant must be oriented, isometric or weak")),
        }
    }
}

/// A vertex map from `pattern` into an orientation of `host`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCertificate {
    pub pattern: Digraph,
    pub host: Graph,
    pub bits: FixedBitSet,
    pub map: Vec<usize>,
    pub variant: Variant,
}

impl EmbeddingCertificate {
    pub fn new(pattern: &Digraph, host: &Orientation<'_>, map: Vec<usize>, variant: Variant) -> Self {
        EmbeddingCertificate {
            pattern: pattern.clone(),
            host: host.host().clone(),
            bits: host.bits().clone(),
            map,
            variant,
        }
    }

    pub fn orientation(&self) -> Orientation<'_> {
        Orientation::new(&self.host, self.bits.clone()).expect("certificate bits match its host")
    }
}

const FAR: u32 = u32::MAX;

/// Dense view of a host graph with its distances, re-orientable in place.
#[derive(Clone, Debug)]
pub struct HostView {
    n: usize,
    edges: Vec<(usize, usize)>,
    arc: Vec<bool>,
    dist: Vec<u32>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl HostView {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let dm = distance_matrix(g);
        let mut dist = vec![FAR; n * n];
        for u in 0..n {
            for v in 0..n {
                if let Some(d) = dm.get(u, v).value() {
                    dist[u * n + v] = d;
                }
            }
        }
        HostView {
            n,
            edges: g.edges().to_vec(),
            arc: vec![false; n * n],
            dist,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
        }
    }

    pub fn orient(&mut self, o: &Orientation<'_>) {
        debug_assert_eq!(o.host().size(), self.edges.len());
        for l in self.out.iter_mut().chain(self.inn.iter_mut()) {
            l.clear();
        }
        for i in 0..self.edges.len() {
            let (a, b) = self.edges[i];
            let (s, t) = o.arc(i);
            self.arc[a * self.n + b] = s == a;
            self.arc[b * self.n + a] = s == b;
            self.out[s].push(t);
            self.inn[t].push(s);
        }
    }

    #[inline]
    fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arc[u * self.n + v]
    }

    #[inline]
    fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

/// Pattern preprocessing: a connectivity-respecting vertex order with the
/// placed neighbour (if any) that each new vertex hangs from.
#[derive(Clone, Debug)]
pub struct PatternPlan {
    pattern: Digraph,
    order: Vec<usize>,
    /// For position `i`: `(anchor vertex, anchor -> vertex?)`.
    anchor: Vec<Option<(usize, bool)>>,
    dist: Vec<u32>,
}

impl PatternPlan {
    pub fn new(pattern: &Digraph) -> Self {
        let n = pattern.order();
        let shadow = pattern.shadow();
        let dm = distance_matrix(&shadow);
        let mut dist = vec![FAR; n * n];
        for u in 0..n {
            for v in 0..n {
                if let Some(d) = dm.get(u, v).value() {
                    dist[u * n + v] = d;
                }
            }
        }
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut anchor = Vec::with_capacity(n);
        loop {
            let start = (0..n)
                .filter(|&v| !seen[v])
                .max_by_key(|&v| (shadow.degree(v), std::cmp::Reverse(v)));
            let Some(start) = start else { break };
            seen[start] = true;
            order.push(start);
            anchor.push(None);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in shadow.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        order.push(w);
                        anchor.push(Some((u, pattern.has_arc(u, w))));
                        queue.push_back(w);
                    }
                }
            }
        }
        PatternPlan {
            pattern: pattern.clone(),
            order,
            anchor,
            dist,
        }
    }

    pub fn pattern(&self) -> &Digraph {
        &self.pattern
    }

    #[inline]
    fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.pattern.order() + v]
    }

    /// Exhaustive search; returns the map `pattern vertex -> host vertex`.
    pub fn find(&self, host: &HostView, variant: Variant) -> Option<Vec<usize>> {
        let n = self.pattern.order();
        if n > host.n {
            return None;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; host.n];
        self.extend(0, host, variant, &mut map, &mut used).then_some(map)
    }

    fn compatible(&self, i: usize, c: usize, host: &HostView, variant: Variant, map: &[usize]) -> bool {
        let u = self.order[i];
        self.order[..i].iter().all(|&w| {
            let fw = map[w];
            let p_uw = self.pattern.has_arc(u, w);
            let p_wu = self.pattern.has_arc(w, u);
            match variant {
                Variant::Weak => (!p_uw || host.has_arc(c, fw)) && (!p_wu || host.has_arc(fw, c)),
                Variant::Oriented => p_uw == host.has_arc(c, fw) && p_wu == host.has_arc(fw, c),
                Variant::Isometric => {
                    p_uw == host.has_arc(c, fw)
                        && p_wu == host.has_arc(fw, c)
                        && self.dist(u, w) == host.dist(c, fw)
                }
            }
        })
    }

    fn extend(
        &self,
        i: usize,
        host: &HostView,
        variant: Variant,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if i == self.order.len() {
            return true;
        }
        let u = self.order[i];
        let try_candidate = |c: usize, map: &mut [usize], used: &mut [bool]| -> bool {
            if used[c] || !self.compatible(i, c, host, variant, map) {
                return false;
            }
            map[u] = c;
            used[c] = true;
            if self.extend(i + 1, host, variant, map, used) {
                return true;
            }
            used[c] = false;
            map[u] = usize::MAX;
            false
        };
        match self.anchor[i] {
            Some((a, forward)) => {
                let fa = map[a];
                let list = if forward { &host.out[fa] } else { &host.inn[fa] };
                list.iter().any(|&c| try_candidate(c, map, used))
            }
            None => (0..host.n).any(|c| try_candidate(c, map, used)),
        }
    }
}

/// Searches for an embedding of `pattern` into the oriented host.
pub fn find_embedding(
    pattern: &Digraph,
    host: &Orientation<'_>,
    variant: Variant,
) -> Option<EmbeddingCertificate> {
    let mut view = HostView::new(host.host());
    view.orient(host);
    PatternPlan::new(pattern)
        .find(&view, variant)
        .map(|map| EmbeddingCertificate::new(pattern, host, map, variant))
}
