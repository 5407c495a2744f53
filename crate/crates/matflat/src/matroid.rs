//! Matroid oracles: a ground set plus a rank function, with closure, lazy
//! minors (contraction / deletion / restriction), simplification, and a
//! rank-3 representability test.
//!
//! Five oracle kinds are supported. Linear matroids rank by Gaussian
//! elimination over GF(q). Rank-3 point-line matroids are given by their
//! long lines (the lines with at least 3 points), which determine a simple
//! rank-3 matroid. Uniform matroids rank by cardinality. Minor views hold a
//! reference to their base and translate rank queries lazily, so contraction
//! chains never copy payloads. Simplification views expose one representative
//! per parallel class.
//!
//! Every view keeps the base's element numbering: the ground set of a minor
//! is a subset of the base's `0..n`, which keeps witnesses meaningful after
//! contraction.

use crate::bitset::{Subset, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::gf::FieldTable;
use std::sync::Arc;

/// A matroid oracle. Cheap to clone; views share their base.
#[derive(Clone)]
pub struct Matroid {
    kind: Arc<Kind>,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Matroid")
            .field("kind", &self.kind_name())
            .field("n", &self.n_elements())
            .field("rank", &self.rank())
            .finish()
    }
}

enum Kind {
    Linear(LinearMatroid),
    Rank3(Rank3Matroid),
    Uniform(UniformMatroid),
    Minor(MinorView),
    Simplification(SimplificationView),
}

/// Columns over GF(q); rank of a subset is the matrix rank of its columns.
pub struct LinearMatroid {
    field: FieldTable,
    dim: usize,
    columns: Vec<Vec<u8>>,
}

/// A simple rank-3 matroid described by its long lines.
pub struct Rank3Matroid {
    n: usize,
    long_lines: Vec<Subset>,
}

struct UniformMatroid {
    rank: usize,
    n: usize,
}

struct MinorView {
    base: Matroid,
    contracted: Subset,
    deleted: Subset,
    contracted_rank: usize,
    ground: Subset,
    rank: usize,
}

struct SimplificationView {
    base: Matroid,
    classes: Vec<Subset>,
    ground: Subset,
    rank: usize,
}

impl LinearMatroid {
    fn rank_of(&self, s: &Subset) -> usize {
        let mut basis: Vec<Vec<u8>> = Vec::with_capacity(self.dim);
        let mut pivots: Vec<usize> = Vec::with_capacity(self.dim);
        for e in s.iter() {
            let mut col = self.columns[e].clone();
            if self.reduce_against(&mut col, &basis, &pivots) {
                self.push_normalized(col, &mut basis, &mut pivots);
                if basis.len() == self.dim {
                    break;
                }
            }
        }
        basis.len()
    }

    fn closure_of(&self, s: &Subset) -> Subset {
        let mut basis: Vec<Vec<u8>> = Vec::with_capacity(self.dim);
        let mut pivots: Vec<usize> = Vec::with_capacity(self.dim);
        for e in s.iter() {
            let mut col = self.columns[e].clone();
            if self.reduce_against(&mut col, &basis, &pivots) {
                self.push_normalized(col, &mut basis, &mut pivots);
            }
        }
        if basis.len() == self.dim {
            return Subset::full(self.columns.len());
        }
        let mut out = *s;
        for (e, c) in self.columns.iter().enumerate() {
            if out.contains(e) {
                continue;
            }
            let mut col = c.clone();
            if !self.reduce_against(&mut col, &basis, &pivots) {
                out.insert(e);
            }
        }
        out
    }

    /// Eliminate pivot positions; true if a nonzero (independent) vector remains.
    fn reduce_against(&self, col: &mut [u8], basis: &[Vec<u8>], pivots: &[usize]) -> bool {
        let f = &self.field;
        for (v, &p) in basis.iter().zip(pivots.iter()) {
            let c = col[p];
            if c != 0 {
                for (x, &vx) in col.iter_mut().zip(v.iter()) {
                    *x = f.sub(*x, f.mul(c, vx));
                }
            }
        }
        col.iter().any(|&x| x != 0)
    }

    fn push_normalized(&self, mut col: Vec<u8>, basis: &mut Vec<Vec<u8>>, pivots: &mut Vec<usize>) {
        let f = &self.field;
        let p = col.iter().position(|&x| x != 0).expect("nonzero vector");
        let scale = f.inv(col[p]).expect("nonzero pivot");
        for x in col.iter_mut() {
            *x = f.mul(*x, scale);
        }
        pivots.push(p);
        basis.push(col);
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn columns(&self) -> &[Vec<u8>] {
        &self.columns
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl Rank3Matroid {
    fn rank_of(&self, s: &Subset) -> usize {
        match s.len() {
            0 => 0,
            1 => 1,
            2 => 2,
            _ => {
                if self.long_lines.iter().any(|l| s.is_subset_of(l)) {
                    2
                } else {
                    3
                }
            }
        }
    }

    fn closure_of(&self, s: &Subset) -> Subset {
        match s.len() {
            0 => Subset::EMPTY,
            1 => *s,
            _ => {
                if let Some(line) = self.long_lines.iter().find(|l| s.is_subset_of(l)) {
                    *line
                } else if s.len() == 2 {
                    *s
                } else {
                    Subset::full(self.n)
                }
            }
        }
    }

    pub fn long_lines(&self) -> &[Subset] {
        &self.long_lines
    }
}

impl Matroid {
    /// Linear matroid from length-`dim` columns over the given field.
    pub fn linear(field: FieldTable, dim: usize, columns: Vec<Vec<u8>>) -> Result<Matroid> {
        if columns.len() > MAX_ELEMENTS {
            return Err(Error::ResourceLimit(format!(
                "{} columns exceed the {MAX_ELEMENTS}-element ground-set cap",
                columns.len()
            )));
        }
        for (i, col) in columns.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::InvalidMatroid(format!(
                    "columns[{i}] has length {}, expected {dim}",
                    col.len()
                )));
            }
            for (j, &x) in col.iter().enumerate() {
                if x as usize >= field.q() {
                    return Err(Error::InvalidMatroid(format!(
                        "columns[{i}][{j}] = {x} is not an element of GF({})",
                        field.q()
                    )));
                }
            }
        }
        Ok(Matroid { kind: Arc::new(Kind::Linear(LinearMatroid { field, dim, columns })) })
    }

    /// Simple rank-3 point-line matroid on `0..n` from its long lines.
    /// Validates the linear-space axioms: lines have at least 3 points,
    /// two lines meet in at most one point (equivalently, two points lie
    /// on at most one common line), and no line contains the whole ground
    /// set (the matroid must have rank 3).
    pub fn rank3_from_lines(n: usize, long_lines: Vec<Subset>) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::ResourceLimit(format!(
                "{n} elements exceed the {MAX_ELEMENTS}-element ground-set cap"
            )));
        }
        if n < 3 {
            return Err(Error::InvalidMatroid(format!(
                "a rank-3 matroid needs at least 3 elements, got {n}"
            )));
        }
        let ground = Subset::full(n);
        for (i, line) in long_lines.iter().enumerate() {
            if !line.is_subset_of(&ground) {
                return Err(Error::InvalidMatroid(format!(
                    "long_lines[{i}] contains an element outside 0..{n}"
                )));
            }
            if line.len() < 3 {
                return Err(Error::InvalidMatroid(format!(
                    "long_lines[{i}] has {} points, need at least 3",
                    line.len()
                )));
            }
            if *line == ground {
                return Err(Error::InvalidMatroid(format!(
                    "long_lines[{i}] contains every element, so the rank is 2, not 3"
                )));
            }
        }
        for i in 0..long_lines.len() {
            for j in i + 1..long_lines.len() {
                if long_lines[i].intersection(&long_lines[j]).len() > 1 {
                    return Err(Error::InvalidMatroid(format!(
                        "long_lines[{i}] and long_lines[{j}] share two or more points"
                    )));
                }
            }
        }
        Ok(Matroid { kind: Arc::new(Kind::Rank3(Rank3Matroid { n, long_lines })) })
    }

    /// Uniform matroid U_{r,n}.
    pub fn uniform(rank: usize, n: usize) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::ResourceLimit(format!(
                "{n} elements exceed the {MAX_ELEMENTS}-element ground-set cap"
            )));
        }
        if rank > n {
            return Err(Error::InvalidMatroid(format!(
                "uniform matroid needs r <= n, got r={rank}, n={n}"
            )));
        }
        Ok(Matroid { kind: Arc::new(Kind::Uniform(UniformMatroid { rank, n })) })
    }

    /// Elements of the ground set. For views this is a subset of the base's
    /// numbering; for base matroids it is `0..n`.
    pub fn ground(&self) -> Subset {
        match &*self.kind {
            Kind::Linear(m) => Subset::full(m.columns.len()),
            Kind::Rank3(m) => Subset::full(m.n),
            Kind::Uniform(m) => Subset::full(m.n),
            Kind::Minor(v) => v.ground,
            Kind::Simplification(v) => v.ground,
        }
    }

    pub fn n_elements(&self) -> usize {
        self.ground().len()
    }

    /// Bit-width bound: ground elements are numbered below this.
    pub fn universe(&self) -> usize {
        match &*self.kind {
            Kind::Linear(m) => m.columns.len(),
            Kind::Rank3(m) => m.n,
            Kind::Uniform(m) => m.n,
            Kind::Minor(v) => v.base.universe(),
            Kind::Simplification(v) => v.base.universe(),
        }
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        match &*self.kind {
            Kind::Linear(m) => m.rank_of(&Subset::full(m.columns.len())),
            Kind::Rank3(_) => 3,
            Kind::Uniform(m) => m.rank,
            Kind::Minor(v) => v.rank,
            Kind::Simplification(v) => v.rank,
        }
    }

    /// Rank of a subset of the ground set.
    pub fn rank_of(&self, s: &Subset) -> usize {
        debug_assert!(s.is_subset_of(&self.ground()), "rank_of: not a subset of the ground set");
        match &*self.kind {
            Kind::Linear(m) => m.rank_of(s),
            Kind::Rank3(m) => m.rank_of(s),
            Kind::Uniform(m) => s.len().min(m.rank),
            Kind::Minor(v) => v.base.rank_of(&s.union(&v.contracted)) - v.contracted_rank,
            Kind::Simplification(v) => v.base.rank_of(s),
        }
    }

    /// Closure: all ground elements whose addition does not raise the rank.
    pub fn closure(&self, s: &Subset) -> Subset {
        debug_assert!(s.is_subset_of(&self.ground()), "closure: not a subset of the ground set");
        match &*self.kind {
            Kind::Linear(m) => m.closure_of(s),
            Kind::Rank3(m) => m.closure_of(s),
            Kind::Uniform(m) => {
                if s.len() >= m.rank {
                    Subset::full(m.n)
                } else {
                    *s
                }
            }
            Kind::Minor(v) => v.base.closure(&s.union(&v.contracted)).intersection(&v.ground),
            Kind::Simplification(v) => v.base.closure(s).intersection(&v.ground),
        }
    }

    /// The set of loops, `closure(∅)`.
    pub fn loops(&self) -> Subset {
        self.closure(&Subset::EMPTY)
    }

    pub fn is_simple(&self) -> bool {
        if !self.loops().is_empty() {
            return false;
        }
        self.ground()
            .iter()
            .all(|e| self.closure(&Subset::singleton(e)).len() == 1)
    }

    fn minor_view(&self, extra_contract: Subset, extra_delete: Subset) -> Matroid {
        debug_assert!(extra_contract.is_subset_of(&self.ground()));
        debug_assert!(extra_delete.is_subset_of(&self.ground()));
        debug_assert!(extra_contract.is_disjoint(&extra_delete));
        let (base, c0, d0) = match &*self.kind {
            Kind::Minor(v) => (v.base.clone(), v.contracted, v.deleted),
            _ => (self.clone(), Subset::EMPTY, Subset::EMPTY),
        };
        let contracted = c0.union(&extra_contract);
        let deleted = d0.union(&extra_delete);
        let contracted_rank = base.rank_of(&contracted);
        let ground = base.ground().difference(&contracted).difference(&deleted);
        let rank = base.rank_of(&ground.union(&contracted)) - contracted_rank;
        Matroid {
            kind: Arc::new(Kind::Minor(MinorView {
                base,
                contracted,
                deleted,
                contracted_rank,
                ground,
                rank,
            })),
        }
    }

    /// Contract C: a lazy view with rank(S) = rank_base(S ∪ C) − rank_base(C).
    pub fn contract(&self, c: &Subset) -> Matroid {
        if c.is_empty() {
            return self.clone();
        }
        self.minor_view(*c, Subset::EMPTY)
    }

    /// Delete D.
    pub fn delete(&self, d: &Subset) -> Matroid {
        if d.is_empty() {
            return self.clone();
        }
        self.minor_view(Subset::EMPTY, *d)
    }

    /// Restrict to F, i.e. delete everything outside F.
    pub fn restrict(&self, f: &Subset) -> Matroid {
        self.delete(&self.ground().difference(f))
    }

    /// One representative (the smallest element) per parallel class, loops
    /// removed. Returns the simplification view and the class partition,
    /// ordered by representative.
    pub fn simplify(&self) -> (Matroid, Vec<Subset>) {
        let loops = self.loops();
        let mut seen = loops;
        let mut classes: Vec<Subset> = Vec::new();
        let mut ground = Subset::EMPTY;
        for e in self.ground().iter() {
            if seen.contains(e) {
                continue;
            }
            let class = self.closure(&Subset::singleton(e)).difference(&loops);
            seen = seen.union(&class);
            ground.insert(e);
            classes.push(class);
        }
        let rank = self.rank();
        let view = Matroid {
            kind: Arc::new(Kind::Simplification(SimplificationView {
                base: self.clone(),
                classes: classes.clone(),
                ground,
                rank,
            })),
        };
        (view, classes)
    }

    /// Parallel classes of a simplification view.
    pub fn parallel_classes(&self) -> Option<&[Subset]> {
        match &*self.kind {
            Kind::Simplification(v) => Some(&v.classes),
            _ => None,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match &*self.kind {
            Kind::Linear(_) => "linear",
            Kind::Rank3(_) => "rank3_pointline",
            Kind::Uniform(_) => "uniform",
            Kind::Minor(_) => "minor_view",
            Kind::Simplification(_) => "simplification_view",
        }
    }

    pub fn as_linear(&self) -> Option<&LinearMatroid> {
        match &*self.kind {
            Kind::Linear(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_rank3(&self) -> Option<&Rank3Matroid> {
        match &*self.kind {
            Kind::Rank3(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_uniform(&self) -> Option<(usize, usize)> {
        match &*self.kind {
            Kind::Uniform(m) => Some((m.rank, m.n)),
            _ => None,
        }
    }

    /// Decide whether this simple matroid of rank at most 3 embeds in the
    /// projective plane over GF(q), by exhaustive injective point-mapping
    /// search with line-compatibility pruning.
    pub fn is_gfq_representable_rank_le3(&self, q: u64) -> Result<bool> {
        let r = self.rank();
        if r > 3 {
            return Err(Error::Unsupported(format!(
                "representability test only supports rank <= 3, got rank {r}"
            )));
        }
        if !self.is_simple() {
            return Err(Error::Unsupported(
                "representability test requires a simple matroid".into(),
            ));
        }
        let n = self.n_elements();
        match r {
            0 => Ok(n == 0),
            1 => Ok(n <= 1),
            2 => Ok(n as u64 <= q + 1), // fits on one line of PG(2,q)
            _ => self.embeds_in_projective_plane(q),
        }
    }

    fn embeds_in_projective_plane(&self, q: u64) -> Result<bool> {
        let field = FieldTable::build(q)?;
        let plane = Matroid::linear(field.clone(), 3, projective_point_columns(&field, 3))?;
        let npg = plane.n_elements();
        let elems: Vec<usize> = {
            // order a basis first so collinearity constraints bind early
            let g = self.ground();
            let a = g.first().expect("rank 3 needs elements");
            let b = g
                .iter()
                .find(|&x| x != a && self.rank_of(&Subset::from_elems([a, x])) == 2)
                .expect("simple rank-3 matroid has a second point");
            let c = g
                .iter()
                .find(|&x| self.rank_of(&Subset::from_elems([a, b, x])) == 3)
                .expect("rank-3 matroid has a basis");
            let mut v = vec![a, b, c];
            v.extend(g.iter().filter(|&x| x != a && x != b && x != c));
            v
        };
        let n = elems.len();
        if n > npg {
            return Ok(false);
        }
        // closure of each pair, on both sides
        let m_line: Vec<Vec<Subset>> = elems
            .iter()
            .map(|&a| {
                elems
                    .iter()
                    .map(|&b| {
                        if a == b {
                            Subset::EMPTY
                        } else {
                            self.closure(&Subset::from_elems([a, b]))
                        }
                    })
                    .collect()
            })
            .collect();
        let pg_line: Vec<Vec<Subset>> = (0..npg)
            .map(|a| {
                (0..npg)
                    .map(|b| {
                        if a == b {
                            Subset::EMPTY
                        } else {
                            plane.closure(&Subset::from_elems([a, b]))
                        }
                    })
                    .collect()
            })
            .collect();

        fn search(
            t: usize,
            assigned: &mut Vec<usize>,
            used: &mut Subset,
            elems: &[usize],
            m_line: &[Vec<Subset>],
            pg_line: &[Vec<Subset>],
            npg: usize,
        ) -> bool {
            if t == elems.len() {
                return true;
            }
            'candidate: for p in 0..npg {
                if used.contains(p) {
                    continue;
                }
                for i in 0..t {
                    for j in i + 1..t {
                        let collinear_m = m_line[i][j].contains(elems[t]);
                        let collinear_pg = pg_line[assigned[i]][assigned[j]].contains(p);
                        if collinear_m != collinear_pg {
                            continue 'candidate;
                        }
                    }
                }
                assigned.push(p);
                used.insert(p);
                if search(t + 1, assigned, used, elems, m_line, pg_line, npg) {
                    return true;
                }
                assigned.pop();
                used.remove(p);
            }
            false
        }

        let mut assigned = Vec::with_capacity(n);
        let mut used = Subset::EMPTY;
        Ok(search(0, &mut assigned, &mut used, &elems, &m_line, &pg_line, npg))
    }
}

/// One normalized column per 1-dimensional subspace of GF(q)^r: the first
/// nonzero coordinate is 1, enumerated lexicographically.
pub(crate) fn projective_point_columns(field: &FieldTable, r: usize) -> Vec<Vec<u8>> {
    let q = field.q();
    let mut cols = Vec::new();
    let mut v = vec![0u8; r];
    loop {
        if let Some(first) = v.iter().position(|&x| x != 0) {
            if v[first] == 1 {
                cols.push(v.clone());
            }
        }
        // lexicographic odometer, v[0] most significant
        let mut i = r;
        loop {
            if i == 0 {
                return cols;
            }
            i -= 1;
            if (v[i] as usize) + 1 < q {
                v[i] += 1;
                for x in v[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry;

    fn fano() -> Matroid {
        geometry::build_pg(3, 2).unwrap()
    }

    #[test]
    fn rank_examples() {
        let pg = fano();
        assert_eq!(pg.rank_of(&pg.ground()), 3);
        assert_eq!(pg.rank(), 3);
        let u26 = Matroid::uniform(2, 6).unwrap();
        assert_eq!(u26.rank_of(&Subset::from_elems([0, 2, 3, 5])), 2);
        let m3 = geometry::build_blokhuis(3).unwrap();
        assert_eq!(m3.rank(), 3);
        // (0,0),(0,1),(0,2) sit on a removed vertical line, so their rank is 3
        assert_eq!(m3.rank_of(&Subset::from_elems([0, 1, 2])), 3);
        // (0,0),(1,0),(2,0) stay collinear on the slope-0 line
        assert_eq!(m3.rank_of(&Subset::from_elems([0, 3, 6])), 2);
    }

    #[test]
    fn closure_of_two_fano_points_is_their_line() {
        let pg = fano();
        for a in 0..7 {
            for b in a + 1..7 {
                let cl = pg.closure(&Subset::from_elems([a, b]));
                assert_eq!(cl.len(), 3, "Fano line through {a},{b}");
                // brute force: exactly the elements that keep the rank at 2
                for e in 0..7 {
                    let with = Subset::from_elems([a, b, e]);
                    assert_eq!(cl.contains(e), pg.rank_of(&with) == 2 || e == a || e == b);
                }
            }
        }
    }

    #[test]
    fn closure_trivial_cases() {
        let pg = fano();
        assert_eq!(pg.closure(&Subset::EMPTY), Subset::EMPTY);
        let u26 = Matroid::uniform(2, 6).unwrap();
        assert_eq!(u26.closure(&Subset::from_elems([0, 1])), Subset::full(6));
    }

    #[test]
    fn contraction_drops_rank() {
        let pg = fano();
        let v = pg.contract(&Subset::singleton(0));
        assert_eq!(v.rank(), 2);
        assert_eq!(v.rank_of(&v.ground()), 2);
        assert_eq!(v.n_elements(), 6);
    }

    #[test]
    fn contract_twice_equals_contract_union() {
        for m in [fano(), Matroid::uniform(3, 8).unwrap(), geometry::build_ag(3, 2).unwrap()] {
            let g: Vec<usize> = m.ground().to_vec();
            let n = g.len();
            for c1_mask in 0u32..(1 << n) {
                let c1 = Subset::from_elems(g.iter().enumerate().filter(|(i, _)| c1_mask >> i & 1 == 1).map(|(_, &e)| e));
                let rest: Vec<usize> = m.ground().difference(&c1).to_vec();
                // sample second contractions to keep this quick but broad
                for c2_mask in [0u32, 1, 3, (1 << rest.len().min(20)) - 1] {
                    let c2 = Subset::from_elems(
                        rest.iter().enumerate().filter(|(i, _)| c2_mask >> i & 1 == 1).map(|(_, &e)| e),
                    );
                    let chained = m.contract(&c1).contract(&c2);
                    let joined = m.contract(&c1.union(&c2));
                    assert_eq!(chained.ground(), joined.ground());
                    let remaining: Vec<usize> = chained.ground().to_vec();
                    for s_mask in 0u32..(1 << remaining.len().min(10)) {
                        let s = Subset::from_elems(
                            remaining.iter().enumerate().filter(|(i, _)| s_mask >> i & 1 == 1).map(|(_, &e)| e),
                        );
                        assert_eq!(chained.rank_of(&s), joined.rank_of(&s));
                    }
                }
            }
        }
    }

    #[test]
    fn delete_nothing_is_identity() {
        let pg = fano();
        let d = pg.delete(&Subset::EMPTY);
        assert_eq!(d.ground(), pg.ground());
        for mask in 0u32..(1 << 7) {
            let s = Subset::from_elems((0..7).filter(|i| mask >> i & 1 == 1));
            assert_eq!(d.rank_of(&s), pg.rank_of(&s));
        }
    }

    #[test]
    fn simplify_contracted_fano() {
        let pg = fano();
        let v = pg.contract(&Subset::singleton(0));
        let (si, classes) = v.simplify();
        assert_eq!(classes.len(), 3); // three lines through the contracted point
        assert!(classes.iter().all(|c| c.len() == 2));
        assert_eq!(si.n_elements(), 3);
        assert_eq!(si.rank(), 2);
        assert!(si.is_simple());
    }

    #[test]
    fn simplify_simple_matroid_is_identity() {
        let pg = fano();
        let (si, classes) = pg.simplify();
        assert_eq!(si.ground(), pg.ground());
        assert_eq!(classes.len(), 7);
        assert!(classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn simplify_contracted_blokhuis_has_2q_minus_1_classes() {
        let m3 = geometry::build_blokhuis(3).unwrap();
        for e in m3.ground().iter() {
            let (_, classes) = m3.contract(&Subset::singleton(e)).simplify();
            assert_eq!(classes.len(), 5); // 2q - 1 at q = 3
        }
    }

    #[test]
    fn representability_examples() {
        let pg = fano();
        assert!(pg.is_gfq_representable_rank_le3(2).unwrap());
        // five points in general position need a 5-arc, PG(2,2) has none
        let u35 = Matroid::uniform(3, 5).unwrap();
        assert!(!u35.is_gfq_representable_rank_le3(2).unwrap());
        // but PG(2,4) has hyperovals (6-arcs)
        let u36 = Matroid::uniform(3, 6).unwrap();
        assert!(u36.is_gfq_representable_rank_le3(4).unwrap());
        assert!(!u36.is_gfq_representable_rank_le3(3).unwrap());
        let ag23 = geometry::build_ag(3, 3).unwrap();
        assert!(ag23.is_gfq_representable_rank_le3(3).unwrap());
        // rank-2 cases count points on a line
        let u26 = Matroid::uniform(2, 6).unwrap();
        assert!(u26.is_gfq_representable_rank_le3(5).unwrap());
        assert!(!u26.is_gfq_representable_rank_le3(4).unwrap());
    }

    #[test]
    fn representability_rejects_large_rank() {
        let u44 = Matroid::uniform(4, 4).unwrap();
        assert!(matches!(u44.is_gfq_representable_rank_le3(2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn rank3_validation_rejects_bad_payloads() {
        // short line
        assert!(Matroid::rank3_from_lines(4, vec![Subset::from_elems([0, 1])]).is_err());
        // two lines through two common points
        assert!(Matroid::rank3_from_lines(
            5,
            vec![Subset::from_elems([0, 1, 2]), Subset::from_elems([0, 1, 3])]
        )
        .is_err());
        // a line holding every element has rank 2
        assert!(Matroid::rank3_from_lines(3, vec![Subset::from_elems([0, 1, 2])]).is_err());
        // out-of-range element
        assert!(Matroid::rank3_from_lines(3, vec![Subset::from_elems([1, 2, 3])]).is_err());
        // valid: U_{3,4} given with no long lines
        assert!(Matroid::rank3_from_lines(4, vec![]).is_ok());
    }

    #[test]
    fn closure_is_a_closure_operator() {
        use crate::rng::SplitMix64;
        let instances = vec![
            fano(),
            geometry::build_ag(3, 3).unwrap(),
            geometry::build_blokhuis(4).unwrap(),
            Matroid::uniform(3, 7).unwrap(),
            geometry::build_pg(4, 2).unwrap().contract(&Subset::singleton(2)),
            geometry::build_blokhuis(3).unwrap().delete(&Subset::from_elems([0, 4])),
            geometry::build_pg(3, 3).unwrap().simplify().0,
        ];
        let mut rng = SplitMix64::new(99);
        for m in instances {
            let ground: Vec<usize> = m.ground().to_vec();
            for _ in 0..200 {
                let s = Subset::from_elems(ground.iter().copied().filter(|_| rng.chance(1, 3)));
                let cl = m.closure(&s);
                assert!(s.is_subset_of(&cl), "extensive");
                assert_eq!(m.closure(&cl), cl, "idempotent");
                assert_eq!(m.rank_of(&cl), m.rank_of(&s), "rank-preserving");
                let t = s.union(&Subset::from_elems(
                    ground.iter().copied().filter(|_| rng.chance(1, 4)),
                ));
                assert!(cl.is_subset_of(&m.closure(&t)), "monotone");
            }
        }
    }

    #[test]
    fn simplification_has_no_parallel_pairs() {
        let instances = vec![
            fano().contract(&Subset::singleton(0)),
            geometry::build_blokhuis(3).unwrap().contract(&Subset::singleton(4)),
            geometry::build_pg(4, 2).unwrap().contract(&Subset::from_elems([0, 5])),
            Matroid::uniform(1, 4).unwrap(),
        ];
        for m in instances {
            let (si, classes) = m.simplify();
            assert!(si.loops().is_empty());
            let reps: Vec<usize> = si.ground().to_vec();
            for (i, &a) in reps.iter().enumerate() {
                for &b in reps.iter().skip(i + 1) {
                    assert_eq!(si.rank_of(&Subset::from_elems([a, b])), 2, "{a},{b} parallel");
                }
            }
            // classes partition the non-loops
            let mut covered = Subset::EMPTY;
            for c in &classes {
                assert!(covered.is_disjoint(c));
                covered = covered.union(c);
            }
            assert_eq!(covered, m.ground().difference(&m.loops()));
        }
    }

    #[test]
    fn uniform_validation() {
        assert!(Matroid::uniform(4, 3).is_err());
        assert!(Matroid::uniform(0, 5).is_ok()); // all loops
        let l = Matroid::uniform(0, 5).unwrap();
        assert_eq!(l.loops(), Subset::full(5));
    }

    mod properties {
        use super::*;
        use crate::gf::FieldTable;
        use proptest::prelude::*;

        fn arbitrary_linear_matroid() -> impl Strategy<Value = Matroid> {
            (prop::sample::select(vec![2u64, 3, 4, 5]), 1usize..=4, 1usize..=8).prop_flat_map(
                |(q, dim, n)| {
                    prop::collection::vec(
                        prop::collection::vec(0u8..q as u8, dim..=dim),
                        n..=n,
                    )
                    .prop_map(move |cols| {
                        Matroid::linear(FieldTable::build(q).unwrap(), dim, cols).unwrap()
                    })
                },
            )
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(40))]

            #[test]
            fn random_linear_matroids_satisfy_rank_axioms(m in arbitrary_linear_matroid()) {
                crate::oracle::check_rank_axioms_exhaustive(&m).unwrap();
            }

            #[test]
            fn random_line_subsets_form_point_line_matroids(
                mask in prop::collection::vec(any::<bool>(), 12)
            ) {
                // any subset of the lines of AG(2,3) is a linear space
                let all = geometry::build_ag(3, 3).unwrap();
                let levels = crate::flats::enumerate_flats(&all, 2).unwrap();
                let lines: Vec<Subset> = levels
                    .level(2)
                    .iter()
                    .map(|f| f.members)
                    .zip(mask.iter())
                    .filter(|(_, &keep)| keep)
                    .map(|(l, _)| l)
                    .collect();
                let kept = lines.len();
                let m = Matroid::rank3_from_lines(9, lines).unwrap();
                // every line kept its 3 points, every dropped pair is free
                let w2 = crate::flats::whitney(&m, 2).unwrap();
                let free_pairs = (12 - kept) * 3;
                prop_assert_eq!(w2, kept + free_pairs);
            }
        }
    }
}
