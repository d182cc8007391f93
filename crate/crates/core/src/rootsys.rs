//! The `F4` root system, its extended Dynkin diagram and maximal-rank
//! subalgebras by node deletion.
//!
//! Node numbering of the extended diagram: `0` is the affine node `-θ`,
//! `1..=4` are the simple roots `e2-e3, e3-e4, e4, (e1-e2-e3-e4)/2`, so
//! the diagram reads `0 - 1 - 2 => 3 - 4` from left to right.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};

pub type Root = [Scalar; 4];

fn ip(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn root(c: [i64; 4], den: i64) -> Root {
    c.map(|x| Scalar::new(x, den))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootSystem {
    pub roots: Vec<Root>,
    pub simple_roots: Vec<Root>,
    pub highest_root: Root,
}

impl RootSystem {
    pub fn f4() -> Self {
        let mut roots = Vec::with_capacity(48);
        for i in 0..4 {
            for s in [1, -1] {
                let mut r = [0; 4];
                r[i] = s;
                roots.push(root(r, 1));
            }
            for j in i + 1..4 {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut r = [0; 4];
                    r[i] = si;
                    r[j] = sj;
                    roots.push(root(r, 1));
                }
            }
        }
        for bits in 0..16 {
            roots.push(root(std::array::from_fn(|k| if bits >> k & 1 == 1 { -1 } else { 1 }), 2));
        }
        let simple_roots = vec![root([0, 1, -1, 0], 1), root([0, 0, 1, -1], 1), root([0, 0, 0, 1], 1), root([1, -1, -1, -1], 2)];
        RootSystem { roots, simple_roots, highest_root: root([1, 1, 0, 0], 1) }
    }

    pub fn long_count(&self) -> usize {
        self.roots.iter().filter(|r| ip(*r, *r) == Scalar::from_int(2)).count()
    }

    /// `2<a, b> / <b, b>` is an integer for every pair of roots.
    pub fn is_crystallographic(&self) -> bool {
        self.roots.iter().all(|a| self.roots.iter().all(|b| (Scalar::from_int(2) * ip(a, b) / ip(b, b)).is_integer()))
    }

    /// Coordinates of `r` in the simple roots.
    pub fn simple_coordinates(&self, r: &Root) -> Vec<Scalar> {
        let m = Matrix::from_columns(&self.simple_roots.iter().map(|s| s.to_vec()).collect::<Vec<_>>(), 4);
        m.solve(r).expect("simple roots form a basis")
    }

    /// Every root is an integer combination of simple roots with all
    /// coefficients of one sign.
    pub fn simple_roots_generate(&self) -> bool {
        self.roots.iter().all(|r| {
            let c = self.simple_coordinates(r);
            c.iter().all(Scalar::is_integer) && (c.iter().all(|x| x.signum() >= 0) || c.iter().all(|x| x.signum() <= 0))
        })
    }

    /// Coefficients of the highest root in the simple roots.
    pub fn marks(&self) -> Vec<i64> {
        self.simple_coordinates(&self.highest_root).iter().map(|x| x.to_i64().expect("integral mark")).collect()
    }

    /// The extended diagram with the affine node first.
    pub fn extended_diagram(&self) -> Diagram {
        let neg: Root = self.highest_root.clone().map(|x| -x);
        let mut nodes = vec![neg];
        nodes.extend(self.simple_roots.iter().cloned());
        Diagram::from_roots(nodes)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    /// Number of bonds, 1..=3.
    pub multiplicity: usize,
    /// Index of the node of the longer root when lengths differ.
    pub long_end: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagram {
    /// Original node labels.
    pub labels: Vec<usize>,
    pub squared_lengths: Vec<Scalar>,
    pub roots: Vec<Root>,
    pub edges: Vec<Edge>,
}

impl Diagram {
    pub fn from_roots(roots: Vec<Root>) -> Self {
        let labels = (0..roots.len()).collect();
        Self::labelled(roots, labels)
    }

    fn labelled(roots: Vec<Root>, labels: Vec<usize>) -> Self {
        let squared_lengths: Vec<Scalar> = roots.iter().map(|r| ip(r, r)).collect();
        let mut edges = Vec::new();
        for a in 0..roots.len() {
            for b in a + 1..roots.len() {
                let (aij, aji) = (cartan_entry(&roots[a], &roots[b]), cartan_entry(&roots[b], &roots[a]));
                let m = (&aij * &aji).to_i64().expect("integral product") as usize;
                if m > 0 {
                    let long_end = match squared_lengths[a].cmp(&squared_lengths[b]) {
                        std::cmp::Ordering::Greater => Some(a),
                        std::cmp::Ordering::Less => Some(b),
                        std::cmp::Ordering::Equal => None,
                    };
                    edges.push(Edge { a, b, multiplicity: m, long_end });
                }
            }
        }
        Diagram { labels, squared_lengths, roots, edges }
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `A_ij = 2<a_i, a_j>/<a_j, a_j>`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        cartan_matrix(&self.roots)
    }

    /// Removes the nodes with the given positions.
    pub fn without(&self, idx: &BTreeSet<usize>) -> Diagram {
        let keep: Vec<usize> = (0..self.len()).filter(|i| !idx.contains(i)).collect();
        Diagram::labelled(keep.iter().map(|&i| self.roots[i].clone()).collect(), keep.iter().map(|&i| self.labels[i]).collect())
    }

    /// Connected components as subdiagrams.
    pub fn components(&self) -> Vec<Diagram> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for e in &self.edges {
                    let w = if e.a == v { e.b } else if e.b == v { e.a } else { continue };
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(Diagram::labelled(comp.iter().map(|&i| self.roots[i].clone()).collect(), comp.iter().map(|&i| self.labels[i]).collect()));
        }
        out
    }

    /// Applies a relabelling `perm[i] = new position of node i`.
    pub fn permuted(&self, perm: &[usize]) -> Diagram {
        let mut roots = vec![self.roots[0].clone(); self.len()];
        let mut labels = vec![0; self.len()];
        for (i, &p) in perm.iter().enumerate() {
            roots[p] = self.roots[i].clone();
            labels[p] = self.labels[i];
        }
        Diagram::labelled(roots, labels)
    }

    /// Classified simple types of the components, sorted.
    pub fn classify(&self) -> Result<Vec<SimpleType>> {
        let mut out = self.components().iter().map(classify_connected).collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }
}

fn cartan_entry(a: &Root, b: &Root) -> Scalar {
    Scalar::from_int(2) * ip(a, b) / ip(b, b)
}

fn cartan_matrix(roots: &[Root]) -> Vec<Vec<i64>> {
    roots.iter().map(|a| roots.iter().map(|b| cartan_entry(a, b).to_i64().expect("integral Cartan entry")).collect()).collect()
}

impl fmt::Display for Diagram {
    /// Chain diagrams print left to right, e.g. `o---o---o=>=o---o`, with the
    /// node labels underneath; other shapes print their edge list.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.len();
        let degree = |v: usize| self.edges.iter().filter(|e| e.a == v || e.b == v).count();
        let is_chain = self.edges.len() + 1 == n && (0..n).all(|v| degree(v) <= 2);
        if n == 0 {
            return write!(f, "(empty)");
        }
        if !is_chain {
            for e in &self.edges {
                writeln!(f, "{} -{}- {}", self.labels[e.a], e.multiplicity, self.labels[e.b])?;
            }
            return Ok(());
        }
        let mut order = vec![(0..n).find(|&v| degree(v) <= 1).expect("chain has an end")];
        while order.len() < n {
            let v = *order.last().expect("nonempty");
            let next = self
                .edges
                .iter()
                .filter_map(|e| if e.a == v { Some(e.b) } else if e.b == v { Some(e.a) } else { None })
                .find(|w| !order.contains(w))
                .expect("chain continues");
            order.push(next);
        }
        let mut top = String::from("o");
        let mut bottom = format!("{}", self.labels[order[0]]);
        for w in order.windows(2) {
            let e = self.edges.iter().find(|e| (e.a == w[0] && e.b == w[1]) || (e.a == w[1] && e.b == w[0])).expect("edge");
            let link = match (e.multiplicity, e.long_end) {
                (1, _) => "---".to_string(),
                (m, Some(l)) => {
                    let bond = if m == 2 { '=' } else { '≡' };
                    let arrow = if l == w[0] { '>' } else { '<' };
                    format!("{bond}{arrow}{bond}")
                }
                (_, None) => "???".to_string(),
            };
            top.push_str(&link);
            top.push('o');
            bottom.push_str(&format!("{:>4}", self.labels[w[1]]));
        }
        write!(f, "{top}\n{bottom}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub const fn new(family: Family, rank: usize) -> Self {
        SimpleType { family, rank }
    }

    /// Simple roots of the standard realization.
    fn simple_roots(self) -> Vec<Vec<Scalar>> {
        let n = self.rank;
        let unit = |len: usize, i: usize, v: i64| -> Vec<Scalar> { (0..len).map(|k| Scalar::from_int(if k == i { v } else { 0 })).collect() };
        let diff = |len: usize, i: usize, j: usize, s: i64| -> Vec<Scalar> { (0..len).map(|k| Scalar::from_int(if k == i { 1 } else if k == j { s } else { 0 })).collect() };
        match self.family {
            Family::A => (0..n).map(|i| diff(n + 1, i, i + 1, -1)).collect(),
            Family::B | Family::C => {
                let mut out: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1, -1)).collect();
                out.push(unit(n, n - 1, if self.family == Family::B { 1 } else { 2 }));
                out
            }
            Family::D => {
                let mut out: Vec<_> = (0..n - 1).map(|i| diff(n, i, i + 1, -1)).collect();
                out.push(diff(n, n - 2, n - 1, 1));
                out
            }
            Family::G => vec![[1, -1, 0].map(Scalar::from_int).to_vec(), [-2, 1, 1].map(Scalar::from_int).to_vec()],
            Family::F => RootSystem::f4().simple_roots.iter().map(|r| r.to_vec()).collect(),
        }
    }

    pub fn cartan(self) -> Vec<Vec<i64>> {
        let roots = self.simple_roots();
        roots
            .iter()
            .map(|a| {
                roots
                    .iter()
                    .map(|b| (Scalar::from_int(2) * ip(a, b) / ip(b, b)).to_i64().expect("integral Cartan entry"))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// Types against which components are matched.
pub const CATALOG: [SimpleType; 13] = [
    SimpleType::new(Family::A, 1),
    SimpleType::new(Family::A, 2),
    SimpleType::new(Family::A, 3),
    SimpleType::new(Family::A, 4),
    SimpleType::new(Family::B, 2),
    SimpleType::new(Family::B, 3),
    SimpleType::new(Family::B, 4),
    SimpleType::new(Family::C, 3),
    SimpleType::new(Family::C, 4),
    SimpleType::new(Family::D, 4),
    SimpleType::new(Family::G, 2),
    SimpleType::new(Family::F, 4),
    SimpleType::new(Family::A, 5),
];

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Exact Cartan-matrix match under some node permutation.
fn cartan_isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    n == b.len() && permutations(n).iter().any(|p| (0..n).all(|i| (0..n).all(|j| a[p[i]][p[j]] == b[i][j])))
}

fn classify_connected(d: &Diagram) -> Result<SimpleType> {
    let c = d.cartan();
    CATALOG
        .iter()
        .copied()
        .find(|t| cartan_isomorphic(&c, &t.cartan()))
        .ok_or_else(|| Error::InvalidArgument(format!("unclassifiable component with Cartan matrix {c:?}")))
}

pub fn f4_extended_diagram() -> Diagram {
    RootSystem::f4().extended_diagram()
}

/// Classified components after deleting the given nodes.
pub fn delete_nodes(d: &Diagram, idx: &BTreeSet<usize>) -> Result<Vec<SimpleType>> {
    if idx.is_empty() {
        return Err(Error::InvalidArgument("no nodes to delete".into()));
    }
    if let Some(i) = idx.iter().find(|&&i| i >= d.len()) {
        return Err(Error::InvalidArgument(format!("node {i} out of range")));
    }
    d.without(idx).classify()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deletion {
    pub node: usize,
    pub mark: i64,
    pub types: Vec<SimpleType>,
    /// The mark is prime, so the subalgebra is maximal.
    pub maximal: bool,
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..n).all(|k| n % k != 0)
}

/// Single-node deletions of the non-affine nodes, deduplicated by type.
pub fn bds_enumerate() -> Result<Vec<Deletion>> {
    let rs = RootSystem::f4();
    let d = rs.extended_diagram();
    let marks = rs.marks();
    let mut out: Vec<Deletion> = Vec::new();
    for node in 1..d.len() {
        let types = delete_nodes(&d, &BTreeSet::from([node]))?;
        if out.iter().any(|x| x.types == types) {
            continue;
        }
        let mark = marks[node - 1];
        out.push(Deletion { node, mark, types, maximal: is_prime(mark) });
    }
    Ok(out)
}

pub fn format_types(types: &[SimpleType]) -> String {
    types.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn types(t: &[(Family, usize)]) -> Vec<SimpleType> {
        let mut v: Vec<_> = t.iter().map(|&(f, r)| SimpleType::new(f, r)).collect();
        v.sort();
        v
    }

    #[test]
    fn root_system_invariants() {
        let rs = RootSystem::f4();
        assert_eq!(rs.roots.len(), 48);
        assert_eq!(rs.long_count(), 24);
        assert!(rs.is_crystallographic());
        assert!(rs.simple_roots_generate());
        assert!(rs.roots.contains(&rs.highest_root));
        assert_eq!(rs.marks(), vec![2, 3, 4, 2]);
        let negs: Vec<Root> = rs.roots.iter().map(|r| r.clone().map(|x| -x)).collect();
        assert!(negs.iter().all(|r| rs.roots.contains(r)));
    }

    #[test]
    fn extended_diagram_shape() {
        let d = f4_extended_diagram();
        assert_eq!(d.len(), 5);
        assert_eq!(d.edges.iter().filter(|e| e.multiplicity == 2).count(), 1);
        assert_eq!(d.edges.len(), 4);
        assert_eq!(d.to_string().lines().next().unwrap(), "o---o---o=>=o---o");
    }

    #[test]
    fn catalog_entries_are_distinct() {
        for (i, a) in CATALOG.iter().enumerate() {
            for b in &CATALOG[i + 1..] {
                assert!(!cartan_isomorphic(&a.cartan(), &b.cartan()), "{a} {b}");
            }
        }
    }

    #[test]
    fn deletions() {
        let d = f4_extended_diagram();
        let del = |i: usize| delete_nodes(&d, &BTreeSet::from([i])).unwrap();
        assert_eq!(del(0), types(&[(Family::F, 4)]));
        assert_eq!(del(1), types(&[(Family::C, 3), (Family::A, 1)]));
        assert_eq!(del(2), types(&[(Family::A, 2), (Family::A, 2)]));
        assert_eq!(del(4), types(&[(Family::B, 4)]));
        assert_eq!(del(3), types(&[(Family::A, 3), (Family::A, 1)]));
        assert_eq!(delete_nodes(&d, &BTreeSet::from([1, 2])).unwrap(), types(&[(Family::A, 1), (Family::A, 2)]));
        assert!(delete_nodes(&d, &BTreeSet::new()).is_err());
    }

    #[test]
    fn enumeration() {
        let all = bds_enumerate().unwrap();
        let maximal: Vec<_> = all.iter().filter(|x| x.maximal).map(|x| x.types.clone()).collect();
        assert_eq!(maximal.len(), 3);
        assert!(maximal.contains(&types(&[(Family::B, 4)])));
        assert!(maximal.contains(&types(&[(Family::C, 3), (Family::A, 1)])));
        assert!(maximal.contains(&types(&[(Family::A, 2), (Family::A, 2)])));
        assert!(all.iter().all(|x| x.types.iter().map(|t| t.rank).sum::<usize>() == 4));
    }

    #[test]
    fn json_roundtrip() {
        let d = f4_extended_diagram();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<Diagram>(&s).unwrap(), d);
    }

    proptest! {
        #[test]
        fn classification_ignores_labelling(seed in 0usize..120, node in 0usize..5) {
            let perm = &permutations(5)[seed];
            let d = f4_extended_diagram();
            let p = d.permuted(perm);
            let direct = delete_nodes(&d, &BTreeSet::from([node])).unwrap();
            let relabelled = delete_nodes(&p, &BTreeSet::from([perm[node]])).unwrap();
            prop_assert_eq!(direct, relabelled);
        }
    }
}
