//! Quivers, admissible relations, and the bound quiver algebra builder.
//!
//! Path composition is left-to-right: for arrows `p: u -> v` and
//! `q: v -> w` the product written `p q` is "first p, then q".  The basis of
//! the quotient algebra consists of the residue classes of the paths not
//! eliminated by the relation ideal, computed degreewise until every path of
//! some length lies in the ideal.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Algebra, Provenance};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut seen = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if seen.insert(v.clone(), i).is_some() {
                return Err(Error::BadQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut names = BTreeMap::new();
        let mut out = Vec::new();
        for (name, s, t) in arrows {
            let source = *seen
                .get(&s)
                .ok_or_else(|| Error::BadQuiver(format!("unknown vertex {s}")))?;
            let target = *seen
                .get(&t)
                .ok_or_else(|| Error::BadQuiver(format!("unknown vertex {t}")))?;
            if names.insert(name.clone(), out.len()).is_some() || seen.contains_key(&name) {
                return Err(Error::BadQuiver(format!("duplicate name {name}")));
            }
            out.push(Arrow { name, source, target });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }
}

/// A linear combination of parallel paths (each of length >= 2), given by
/// arrow names in left-to-right order.
#[derive(Clone, Debug)]
pub struct Relation<F: Field> {
    pub terms: Vec<(F::Elem, Vec<String>)>,
}

impl<F: Field> Relation<F> {
    pub fn monomial_in(field: &F, path: Vec<String>) -> Self {
        Relation {
            terms: vec![(field.one(), path)],
        }
    }

    /// `left - right`, the commutation-style relation.
    pub fn difference_in(field: &F, left: Vec<String>, right: Vec<String>) -> Self {
        Relation {
            terms: vec![
                (field.one(), left),
                (field.neg(&field.one()), right),
            ],
        }
    }
}

/// A path: source vertex plus an arrow-index word (empty = trivial path).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Path {
    source: usize,
    arrows: Vec<usize>,
}

impl Path {
    fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| q.arrows[a].target)
    }
}

struct ResolvedRelation<F: Field> {
    terms: Vec<(F::Elem, Vec<usize>)>,
    source: usize,
    target: usize,
    len: usize,
}

fn resolve_relations<F: Field>(
    field: &F,
    q: &Quiver,
    rels: &[Relation<F>],
) -> Result<Vec<ResolvedRelation<F>>> {
    let mut out = Vec::new();
    for rel in rels {
        if rel.terms.is_empty() {
            continue;
        }
        let mut resolved: Vec<(F::Elem, Vec<usize>)> = Vec::new();
        let mut endpoints: Option<(usize, usize, usize)> = None;
        for (coeff, path) in &rel.terms {
            if path.len() < 2 {
                return Err(Error::BadQuiver(
                    "relation path shorter than 2 (not admissible)".to_string(),
                ));
            }
            let mut arrows = Vec::with_capacity(path.len());
            for name in path {
                let idx = q
                    .arrow_index(name)
                    .ok_or_else(|| Error::BadQuiver(format!("unknown arrow {name}")))?;
                arrows.push(idx);
            }
            for w in arrows.windows(2) {
                if q.arrows[w[0]].target != q.arrows[w[1]].source {
                    return Err(Error::BadQuiver(format!(
                        "path not composable at {}",
                        q.arrows[w[1]].name
                    )));
                }
            }
            let s = q.arrows[arrows[0]].source;
            let t = q.arrows[*arrows.last().unwrap()].target;
            match endpoints {
                None => endpoints = Some((s, t, arrows.len())),
                Some((es, et, el)) => {
                    if es != s || et != t {
                        return Err(Error::BadQuiver(
                            "relation terms are not parallel".to_string(),
                        ));
                    }
                    if el != arrows.len() {
                        return Err(Error::MixedLengthRelation);
                    }
                }
            }
            resolved.push((coeff.clone(), arrows));
        }
        let (source, target, len) = endpoints.unwrap();
        let _ = field;
        out.push(ResolvedRelation {
            terms: resolved,
            source,
            target,
            len,
        });
    }
    Ok(out)
}

/// Reduction data for one path length: which raw paths survive as basis
/// classes and how eliminated paths rewrite into them.
struct LayerReduction<F: Field> {
    paths: Vec<Path>,
    /// rewrite[i] = coefficients of raw path i over the surviving classes.
    rewrite: Vec<Vec<F::Elem>>,
    /// Indices (into `paths`) of the surviving classes.
    survivors: Vec<usize>,
}

/// Build the bound quiver algebra kQ/(rels), iterating path lengths until
/// every path of some length lies in the relation ideal.
///
/// Relations must be length-homogeneous (all terms the same length); the
/// degreewise elimination relies on it.  `cap` bounds the path length
/// explored before giving up with `NotNilpotent`.
pub fn algebra_from_quiver<F: Field>(
    field: F,
    q: &Quiver,
    rels: &[Relation<F>],
    cap: usize,
) -> Result<Algebra<F>> {
    let rels = resolve_relations(&field, q, rels)?;
    let mut layers: Vec<LayerReduction<F>> = Vec::new();

    // Length 0: trivial paths, never eliminated.
    let layer0 = LayerReduction {
        paths: (0..q.vertices.len())
            .map(|v| Path { source: v, arrows: vec![] })
            .collect(),
        rewrite: (0..q.vertices.len())
            .map(|i| {
                let mut r = vec![field.zero(); q.vertices.len()];
                r[i] = field.one();
                r
            })
            .collect(),
        survivors: (0..q.vertices.len()).collect(),
    };
    layers.push(layer0);

    let mut stop_len: Option<usize> = None;
    for len in 1..=cap {
        // Extend surviving raw paths of the previous length by one arrow.
        // Dead raw paths need no extension: any longer path through them
        // already lies in the ideal.
        let prev = &layers[len - 1];
        let mut paths = Vec::new();
        for p in &prev.paths {
            let t = p.target(q);
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == t {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    paths.push(Path { source: p.source, arrows });
                }
            }
        }
        paths.sort();
        paths.dedup();
        if paths.len() > 200_000 {
            return Err(Error::NotNilpotent { cap });
        }
        let index: BTreeMap<&Path, usize> =
            paths.iter().enumerate().map(|(i, p)| (p, i)).collect();

        // Ideal slice at this length: all translates u * r * v with
        // |u| + |r| + |v| = len.
        let mut translate_rows: Vec<Vec<F::Elem>> = Vec::new();
        for rel in &rels {
            if rel.len > len {
                continue;
            }
            for a in 0..=(len - rel.len) {
                let b = len - rel.len - a;
                for u in paths_between(q, None, Some(rel.source), a) {
                    for v in paths_between(q, Some(rel.target), None, b) {
                        let mut row = vec![field.zero(); paths.len()];
                        for (coeff, word) in &rel.terms {
                            let mut arrows = u.arrows.clone();
                            arrows.extend(word.iter().copied());
                            arrows.extend(v.arrows.iter().copied());
                            let full = Path {
                                source: u.source,
                                arrows,
                            };
                            let i = index[&full];
                            row[i] = field.add(&row[i], coeff);
                        }
                        translate_rows.push(row);
                    }
                }
            }
        }

        let layer = reduce_layer(&field, paths, translate_rows);
        let all_dead = layer.survivors.is_empty();
        layers.push(layer);
        if all_dead {
            stop_len = Some(len);
            break;
        }
    }
    let Some(stop) = stop_len else {
        return Err(Error::NotNilpotent { cap });
    };

    // Global basis: surviving classes of length < stop.
    let mut global: Vec<(usize, usize)> = Vec::new(); // (length, local survivor pos)
    let mut global_of: BTreeMap<(usize, usize), usize> = BTreeMap::new(); // (length, raw idx) -> global
    for (len, layer) in layers.iter().enumerate().take(stop) {
        for (pos, &raw) in layer.survivors.iter().enumerate() {
            global_of.insert((len, raw), global.len());
            global.push((len, pos));
        }
    }
    let dim = global.len();
    let labels: Vec<String> = global
        .iter()
        .map(|&(len, pos)| {
            let raw = layers[len].survivors[pos];
            let p = &layers[len].paths[raw];
            if p.arrows.is_empty() {
                format!("e_{}", q.vertices[p.source])
            } else {
                p.arrows
                    .iter()
                    .map(|&a| q.arrows[a].name.clone())
                    .collect::<Vec<_>>()
                    .join("*")
            }
        })
        .collect();

    // Structure constants by concatenation + reduction.
    let zero_row = vec![field.zero(); dim];
    let mut table = vec![vec![zero_row.clone(); dim]; dim];
    for (i, &(li, pi)) in global.iter().enumerate() {
        let rawi = layers[li].survivors[pi];
        let p = layers[li].paths[rawi].clone();
        for (j, &(lj, pj)) in global.iter().enumerate() {
            let rawj = layers[lj].survivors[pj];
            let r = &layers[lj].paths[rawj];
            if p.target(q) != r.source {
                continue;
            }
            let len = li + lj;
            if len >= stop {
                continue; // lies in the ideal
            }
            let mut arrows = p.arrows.clone();
            arrows.extend(r.arrows.iter().copied());
            let cat = Path { source: p.source, arrows };
            let layer = &layers[len];
            let Some(raw) = layer.paths.iter().position(|x| *x == cat) else {
                continue; // passes through a dead path of an earlier length
            };
            let mut out = vec![field.zero(); dim];
            for (pos, c) in layer.rewrite[raw].iter().enumerate() {
                if !field.is_zero(c) {
                    let g = global_of[&(len, layer.survivors[pos])];
                    out[g] = field.add(&out[g], c);
                }
            }
            table[i][j] = out;
        }
    }

    let mut one = vec![field.zero(); dim];
    let mut idempotents = Vec::new();
    let mut idem_labels = Vec::new();
    for v in 0..q.vertices.len() {
        let g = global_of[&(0usize, v)];
        one[g] = field.one();
        let mut e = vec![field.zero(); dim];
        e[g] = field.one();
        idempotents.push(e);
        idem_labels.push(q.vertices[v].clone());
    }

    Algebra::new(
        field,
        labels,
        table,
        one,
        idempotents,
        idem_labels,
        Provenance::Quiver,
    )
}

/// All paths of exactly `len` arrows, optionally constrained at the ends.
fn paths_between(q: &Quiver, from: Option<usize>, to: Option<usize>, len: usize) -> Vec<Path> {
    let mut frontier: Vec<Path> = match from {
        Some(v) => vec![Path { source: v, arrows: vec![] }],
        None => (0..q.vertices.len())
            .map(|v| Path { source: v, arrows: vec![] })
            .collect(),
    };
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &frontier {
            let t = p.target(q);
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == t {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path { source: p.source, arrows });
                }
            }
        }
        frontier = next;
    }
    frontier
        .into_iter()
        .filter(|p| to.is_none_or(|t| p.target(q) == t))
        .collect()
}

fn reduce_layer<F: Field>(
    field: &F,
    paths: Vec<Path>,
    rows: Vec<Vec<F::Elem>>,
) -> LayerReduction<F> {
    let n = paths.len();
    let m = Matrix::from_rows(field.clone(), rows);
    let m = if m.rows == 0 {
        Matrix::zero(field.clone(), 0, n)
    } else {
        m
    };
    // Row reduce; pivots are eliminated paths.
    let work = m;
    let (reduced, pivots) = rref_with_pivots(field, work, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let survivors: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
    let pos_of: BTreeMap<usize, usize> = survivors.iter().enumerate().map(|(p, &s)| (s, p)).collect();
    let mut rewrite = vec![vec![field.zero(); survivors.len()]; n];
    for (i, r) in rewrite.iter_mut().enumerate().take(n) {
        if let Some(&pos) = pos_of.get(&i) {
            r[pos] = field.one();
        }
    }
    for (row, &piv) in pivots.iter().enumerate() {
        // e_piv = -sum over free columns of entry * e_free
        for (&s, &pos) in pos_of.iter() {
            let c = reduced.at(row, s);
            if !field.is_zero(c) {
                rewrite[piv][pos] = field.neg(c);
            }
        }
    }
    LayerReduction { paths, rewrite, survivors }
}

fn rref_with_pivots<F: Field>(
    field: &F,
    mut m: Matrix<F>,
    cols: usize,
) -> (Matrix<F>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&r| !field.is_zero(m.at(r, col))) else {
            continue;
        };
        if p != row {
            for j in 0..cols {
                let a = m.at(row, j).clone();
                let b = m.at(p, j).clone();
                m.set(row, j, b);
                m.set(p, j, a);
            }
        }
        let inv = field.inv(m.at(row, col)).unwrap();
        for j in 0..cols {
            let v = field.mul(m.at(row, j), &inv);
            m.set(row, j, v);
        }
        for r in 0..m.rows {
            if r != row && !field.is_zero(m.at(r, col)) {
                let f = m.at(r, col).clone();
                for j in 0..cols {
                    let v = field.sub(m.at(r, j), &field.mul(&f, m.at(row, j)));
                    m.set(r, j, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (m, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn s(x: &str) -> String {
        x.to_string()
    }

    #[test]
    fn loop_with_square_zero_has_dimension_two() {
        let q = Quiver::new(vec![s("1")], vec![(s("a"), s("1"), s("1"))]).unwrap();
        let rels = vec![Relation::monomial_in(&Rationals, vec![s("a"), s("a")])];
        let a = algebra_from_quiver(Rationals, &q, &rels, 64).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels(), &[s("e_1"), s("a")]);
    }

    // Oracle: paths of the linear A3 quiver 3 -> 2 -> 1 are the three trivial
    // paths, the two arrows, and one length-2 path: dimension 6.
    #[test]
    fn linear_a3_path_algebra_has_dimension_six() {
        let q = Quiver::new(
            vec![s("1"), s("2"), s("3")],
            vec![(s("a"), s("2"), s("1")), (s("b"), s("3"), s("2"))],
        )
        .unwrap();
        let a = algebra_from_quiver(Rationals, &q, &[], 64).unwrap();
        assert_eq!(a.dim(), 6);
    }

    #[test]
    fn two_cycle_with_one_dead_path_has_dimension_five() {
        // alpha: 2 -> 1, beta: 1 -> 2, path 2 -> 1 -> 2 dead.
        let q = Quiver::new(
            vec![s("1"), s("2")],
            vec![(s("alpha"), s("2"), s("1")), (s("beta"), s("1"), s("2"))],
        )
        .unwrap();
        let rels = vec![Relation::monomial_in(&Rationals, vec![s("alpha"), s("beta")])];
        let a = algebra_from_quiver(Rationals, &q, &rels, 64).unwrap();
        assert_eq!(a.dim(), 5);
    }

    #[test]
    fn inadmissible_ideal_is_rejected() {
        // A loop with no relations is infinite-dimensional.
        let q = Quiver::new(vec![s("1")], vec![(s("a"), s("1"), s("1"))]).unwrap();
        let err = algebra_from_quiver(Rationals, &q, &[], 8).unwrap_err();
        assert_eq!(err, Error::NotNilpotent { cap: 8 });
    }

    #[test]
    fn mixed_length_relation_is_rejected() {
        let q = Quiver::new(vec![s("1")], vec![(s("a"), s("1"), s("1"))]).unwrap();
        let rel = Relation::<Rationals> {
            terms: vec![
                (Rationals.one(), vec![s("a"), s("a")]),
                (Rationals.one(), vec![s("a"), s("a"), s("a")]),
            ],
        };
        let err = algebra_from_quiver(Rationals, &q, &[rel], 8).unwrap_err();
        assert_eq!(err, Error::MixedLengthRelation);
    }

    #[test]
    fn commutation_relation_merges_paths() {
        // Commutative square: two length-2 paths identified.
        let q = Quiver::new(
            vec![s("1"), s("2"), s("3"), s("4")],
            vec![
                (s("a"), s("1"), s("2")),
                (s("b"), s("2"), s("4")),
                (s("c"), s("1"), s("3")),
                (s("d"), s("3"), s("4")),
            ],
        )
        .unwrap();
        let rels = vec![Relation::difference_in(
            &Rationals,
            vec![s("a"), s("b")],
            vec![s("c"), s("d")],
        )];
        let a = algebra_from_quiver(Rationals, &q, &rels, 64).unwrap();
        // 4 trivial + 4 arrows + 1 merged length-2 class.
        assert_eq!(a.dim(), 9);
    }
}
