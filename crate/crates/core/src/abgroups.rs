//! Finitely generated abelian groups `Z^r x Z_{m_1} x ... x Z_{m_s}`,
//! homomorphisms between them, Smith normal form, automorphism enumeration
//! for small finite groups, and alternating bicharacters with their
//! automorphism groups.

use num::Integer;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

use crate::scalars::CycScalar;
use crate::{Error, Result};

pub const DEFAULT_AUT_BOUND: i64 = 243; // 3^5
pub const DEFAULT_BICHAR_BOUND: i64 = 256;

/// `Z^free_rank x Z_{m_1} x ... x Z_{m_s}`. Coordinates are ordered free
/// part first. The moduli order is construction-dependent (divisibility
/// chain from SNF, or symplectic-pair order from `standard_bicharacter`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbGroup {
    pub free_rank: usize,
    pub moduli: Vec<i64>,
}

impl AbGroup {
    pub fn new(free_rank: usize, moduli: Vec<i64>) -> AbGroup {
        assert!(moduli.iter().all(|&m| m >= 2), "moduli must be >= 2");
        AbGroup { free_rank, moduli }
    }

    pub fn free(rank: usize) -> AbGroup {
        AbGroup { free_rank: rank, moduli: vec![] }
    }

    /// Number of coordinates (generators).
    pub fn ngens(&self) -> usize {
        self.free_rank + self.moduli.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<i64> {
        if self.free_rank > 0 {
            None
        } else {
            Some(self.moduli.iter().product())
        }
    }

    /// Order of the i-th generator: 0 marks infinite.
    pub fn gen_modulus(&self, i: usize) -> i64 {
        if i < self.free_rank {
            0
        } else {
            self.moduli[i - self.free_rank]
        }
    }

    pub fn reduce(&self, coords: &mut [i64]) {
        assert_eq!(coords.len(), self.ngens());
        for (k, &m) in self.moduli.iter().enumerate() {
            coords[self.free_rank + k] = coords[self.free_rank + k].rem_euclid(m);
        }
    }

    pub fn elem(&self, coords: Vec<i64>) -> AbElem {
        let mut coords = coords;
        self.reduce(&mut coords);
        AbElem { group: self.clone(), coords }
    }

    pub fn zero(&self) -> AbElem {
        self.elem(vec![0; self.ngens()])
    }

    pub fn generator(&self, i: usize) -> AbElem {
        let mut coords = vec![0; self.ngens()];
        coords[i] = 1;
        self.elem(coords)
    }

    /// All elements of a finite group, in odometer order.
    pub fn elements(&self) -> Vec<AbElem> {
        assert!(self.is_finite(), "cannot enumerate an infinite group");
        let n = self.moduli.len();
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        loop {
            out.push(AbElem { group: self.clone(), coords: cur.clone() });
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                cur[i] += 1;
                if cur[i] < self.moduli[i] {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    /// Invariant-factor normal form `(free rank, d_1 | d_2 | ...)`.
    pub fn normal_form(&self) -> (usize, Vec<i64>) {
        if self.moduli.is_empty() {
            return (self.free_rank, vec![]);
        }
        let s = self.moduli.len();
        let mut rel = vec![vec![0i64; s]; s];
        for i in 0..s {
            rel[i][i] = self.moduli[i];
        }
        let snf = smith_normal_form(&rel);
        let moduli = snf.d.iter().copied().filter(|&d| d >= 2).collect();
        (self.free_rank, moduli)
    }

    pub fn is_isomorphic_to(&self, other: &AbGroup) -> bool {
        self.normal_form() == other.normal_form()
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for &m in &self.moduli {
            parts.push(format!("Z_{}", m));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AbElem {
    pub group: AbGroup,
    pub coords: Vec<i64>,
}

impl fmt::Display for AbElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

impl AbElem {
    pub fn add(&self, other: &AbElem) -> AbElem {
        assert_eq!(self.group, other.group);
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        self.group.elem(coords)
    }

    pub fn neg(&self) -> AbElem {
        self.group.elem(self.coords.iter().map(|a| -a).collect())
    }

    pub fn sub(&self, other: &AbElem) -> AbElem {
        self.add(&other.neg())
    }

    pub fn smul(&self, k: i64) -> AbElem {
        self.group.elem(self.coords.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Order of the element; None if infinite.
    pub fn order(&self) -> Option<i64> {
        let mut ord = 1i64;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let m = self.group.gen_modulus(i);
            if m == 0 {
                return None;
            }
            ord = ord.lcm(&(m / m.gcd(&c)));
        }
        Some(ord)
    }
}

/// Homomorphism given by an integer matrix on coordinates: column j is the
/// image of the j-th source generator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbHom {
    pub source: AbGroup,
    pub target: AbGroup,
    /// row-major, target.ngens() x source.ngens(), torsion rows reduced
    pub matrix: Vec<Vec<i64>>,
}

impl AbHom {
    pub fn new(source: AbGroup, target: AbGroup, matrix: Vec<Vec<i64>>) -> Result<AbHom> {
        assert_eq!(matrix.len(), target.ngens());
        for row in &matrix {
            assert_eq!(row.len(), source.ngens());
        }
        let mut matrix = matrix;
        for (i, row) in matrix.iter_mut().enumerate() {
            let m = target.gen_modulus(i);
            if m != 0 {
                for c in row.iter_mut() {
                    *c = c.rem_euclid(m);
                }
            }
        }
        // well-defined: each torsion generator of order m maps to an element
        // killed by m
        for j in 0..source.ngens() {
            let m = source.gen_modulus(j);
            if m == 0 {
                continue;
            }
            for i in 0..target.ngens() {
                let tm = target.gen_modulus(i);
                let v = m * matrix[i][j];
                let ok = if tm == 0 { v == 0 } else { v % tm == 0 };
                if !ok {
                    return Err(Error::invalid(format!(
                        "hom not well-defined: generator {} of order {} maps to an element not killed by it",
                        j, m
                    )));
                }
            }
        }
        Ok(AbHom { source, target, matrix })
    }

    pub fn from_images(source: &AbGroup, images: &[AbElem]) -> Result<AbHom> {
        assert_eq!(images.len(), source.ngens());
        let target = images
            .first()
            .map(|e| e.group.clone())
            .unwrap_or_else(|| AbGroup::free(0));
        let mut matrix = vec![vec![0i64; source.ngens()]; target.ngens()];
        for (j, img) in images.iter().enumerate() {
            assert_eq!(img.group, target);
            for i in 0..target.ngens() {
                matrix[i][j] = img.coords[i];
            }
        }
        AbHom::new(source.clone(), target, matrix)
    }

    pub fn identity(g: &AbGroup) -> AbHom {
        let n = g.ngens();
        let mut matrix = vec![vec![0i64; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 1;
        }
        AbHom { source: g.clone(), target: g.clone(), matrix }
    }

    pub fn apply(&self, e: &AbElem) -> AbElem {
        assert_eq!(e.group, self.source);
        let coords = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(&e.coords).map(|(a, b)| a * b).sum())
            .collect();
        self.target.elem(coords)
    }

    /// self after other (self ∘ other).
    pub fn compose(&self, other: &AbHom) -> AbHom {
        assert_eq!(other.target, self.source);
        let rows = self.target.ngens();
        let mid = self.source.ngens();
        let cols = other.source.ngens();
        let mut matrix = vec![vec![0i64; cols]; rows];
        for i in 0..rows {
            for k in 0..mid {
                if self.matrix[i][k] == 0 {
                    continue;
                }
                for j in 0..cols {
                    matrix[i][j] += self.matrix[i][k] * other.matrix[k][j];
                }
            }
        }
        AbHom::new(other.source.clone(), self.target.clone(), matrix)
            .expect("composition of well-defined homs is well-defined")
    }

    pub fn image_of_gen(&self, j: usize) -> AbElem {
        let coords = self.matrix.iter().map(|row| row[j]).collect();
        self.target.elem(coords)
    }

    /// Bijectivity test for an endomorphism: the free block must be
    /// unimodular, and the induced map on the torsion subgroup must be
    /// injective (checked by enumeration; torsion parts here are tiny).
    pub fn is_automorphism(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let r = self.source.free_rank;
        let free_block: Vec<Vec<i64>> =
            (0..r).map(|i| (0..r).map(|j| self.matrix[i][j]).collect()).collect();
        if det(&free_block).abs() != 1 {
            return false;
        }
        // torsion generators map into torsion (well-definedness kills free
        // coordinates), so the torsion block alone decides bijectivity there
        let torsion = AbGroup::new(0, self.source.moduli.clone());
        let mut seen = HashSet::new();
        for t in torsion.elements() {
            let mut coords = vec![0i64; self.source.ngens()];
            for (k, &c) in t.coords.iter().enumerate() {
                coords[r + k] = c;
            }
            let img = self.apply(&self.source.elem(coords));
            if !seen.insert(img.coords[r..].to_vec()) {
                return false;
            }
        }
        true
    }
}

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    // fraction-free via SNF diagonal product sign is overkill; use i128
    // Bareiss for exactness at these sizes
    let mut a: Vec<Vec<i128>> =
        m.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Smith normal form `U * M * V = D` with unimodular transforms, plus
/// `U^{-1}` for lifting.
pub struct Snf {
    pub d: Vec<i64>,
    pub u: Vec<Vec<i64>>,
    pub u_inv: Vec<Vec<i64>>,
    pub v: Vec<Vec<i64>>,
    pub rows: usize,
    pub cols: usize,
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> Snf {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut u = ident(rows);
    let mut u_inv = ident(rows);
    let mut v = ident(cols);

    // elementary operations, kept consistent on (a, u, u_inv, v)
    let row_add = |a: &mut Vec<Vec<i64>>, u: &mut Vec<Vec<i64>>, ui: &mut Vec<Vec<i64>>,
                   i: usize, j: usize, k: i64| {
        for c in 0..cols {
            a[i][c] += k * a[j][c];
        }
        for c in 0..rows {
            u[i][c] += k * u[j][c];
        }
        for r in 0..rows {
            ui[r][j] -= k * ui[r][i];
        }
    };
    let col_add = |a: &mut Vec<Vec<i64>>, v: &mut Vec<Vec<i64>>, i: usize, j: usize, k: i64| {
        for r in 0..a.len() {
            a[r][i] += k * a[r][j];
        }
        for r in 0..v.len() {
            v[r][i] += k * v[r][j];
        }
    };

    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // locate a nonzero pivot of minimal magnitude in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0
                    && pivot.map_or(true, |(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        if pi != t {
            a.swap(pi, t);
            u.swap(pi, t);
            for r in 0..rows {
                u_inv[r].swap(pi, t);
            }
        }
        if pj != t {
            for row in a.iter_mut() {
                row.swap(pj, t);
            }
            for row in v.iter_mut() {
                row.swap(pj, t);
            }
        }
        // clear row and column t
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    row_add(&mut a, &mut u, &mut u_inv, i, t, -q);
                    if a[i][t] != 0 {
                        a.swap(i, t);
                        u.swap(i, t);
                        for r in 0..rows {
                            u_inv[r].swap(i, t);
                        }
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    col_add(&mut a, &mut v, j, t, -q);
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(j, t);
                        }
                        for row in v.iter_mut() {
                            row.swap(j, t);
                        }
                        dirty = true;
                    }
                }
            }
        }
        // divisibility: a[t][t] must divide the trailing block
        let mut redo = false;
        'scan: for i in t + 1..rows {
            for j in t + 1..cols {
                if a[i][j] % a[t][t] != 0 {
                    row_add(&mut a, &mut u, &mut u_inv, t, i, 1);
                    redo = true;
                    break 'scan;
                }
            }
        }
        if redo {
            continue;
        }
        if a[t][t] < 0 {
            for c in 0..cols {
                a[t][c] = -a[t][c];
            }
            for c in 0..rows {
                u[t][c] = -u[t][c];
            }
            for r in 0..rows {
                u_inv[r][t] = -u_inv[r][t];
            }
        }
        t += 1;
    }
    let d = (0..n).map(|i| a[i][i]).collect();
    Snf { d, u, u_inv, v, rows, cols }
}

fn ident(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// `Z^n / <relations>` in normal form, with the projection and an integer
/// lift (section) of each group generator back to `Z^n`.
pub struct QuotientPresentation {
    pub group: AbGroup,
    pub projection: AbHom,
    /// lift[j] is a representative in Z^n of the j-th group generator;
    /// projection(lift[j]) = generator j
    pub lift: Vec<Vec<i64>>,
}

pub fn quotient_presentation(num_generators: usize, relations: &[Vec<i64>]) -> QuotientPresentation {
    let n = num_generators;
    for r in relations {
        assert_eq!(r.len(), n);
    }
    // relation matrix with relations as columns
    let m = relations.len();
    let mut rel = vec![vec![0i64; m]; n];
    for (j, r) in relations.iter().enumerate() {
        for i in 0..n {
            rel[i][j] = r[i];
        }
    }
    let snf = smith_normal_form(&rel);
    // y = U x; coordinate i has modulus d_i (0 beyond the diagonal)
    let modulus =
        |i: usize| -> i64 { if i < snf.d.len() { snf.d[i] } else { 0 } };
    let free_idx: Vec<usize> = (0..n).filter(|&i| modulus(i) == 0).collect();
    let tors_idx: Vec<usize> = (0..n).filter(|&i| modulus(i) >= 2).collect();
    let group = AbGroup {
        free_rank: free_idx.len(),
        moduli: tors_idx.iter().map(|&i| modulus(i)).collect(),
    };
    let kept: Vec<usize> = free_idx.iter().chain(tors_idx.iter()).copied().collect();
    let matrix: Vec<Vec<i64>> = kept.iter().map(|&i| snf.u[i].clone()).collect();
    let projection = AbHom::new(AbGroup::free(n), group.clone(), matrix)
        .expect("projection from a free group is always well-defined");
    let lift: Vec<Vec<i64>> =
        kept.iter().map(|&i| (0..n).map(|r| snf.u_inv[r][i]).collect()).collect();
    QuotientPresentation { group, projection, lift }
}

/// Solves `sum x_i * gens_i = target` in G, over the integers.
pub fn solve_in_group(g: &AbGroup, gens: &[AbElem], target: &AbElem) -> Option<Vec<i64>> {
    let n = g.ngens();
    let p = gens.len();
    let s = g.moduli.len();
    // columns: the generators, then the torsion relations m_j * e_{r+j}
    let mut a = vec![vec![0i64; p + s]; n];
    for (j, e) in gens.iter().enumerate() {
        assert_eq!(&e.group, g);
        for i in 0..n {
            a[i][j] = e.coords[i];
        }
    }
    for j in 0..s {
        a[g.free_rank + j][p + j] = g.moduli[j];
    }
    let snf = smith_normal_form(&a);
    // U a V = D; a z = t  <=>  D y = U t, z = V y
    let c: Vec<i64> = (0..n)
        .map(|i| (0..n).map(|k| snf.u[i][k] * target.coords[k]).sum())
        .collect();
    let mut y = vec![0i64; p + s];
    for i in 0..n {
        let d = if i < snf.d.len() { snf.d[i] } else { 0 };
        if d == 0 {
            if c[i] != 0 {
                return None;
            }
        } else {
            if c[i] % d != 0 {
                return None;
            }
            y[i] = c[i] / d;
        }
    }
    let z: Vec<i64> = (0..p + s)
        .map(|i| (0..p + s).map(|k| snf.v[i][k] * y[k]).sum())
        .collect();
    Some(z[..p].to_vec())
}

/// Subgroup of a finite group generated by the given elements (abelian, so
/// it is the set of all integer combinations; built incrementally).
pub fn generated_subgroup(g: &AbGroup, gens: &[AbElem]) -> HashSet<Vec<i64>> {
    let mut set: HashSet<Vec<i64>> = HashSet::new();
    set.insert(g.zero().coords);
    for e in gens {
        extend_subgroup(&mut set, e);
    }
    set
}

/// Extends a subgroup (as a coordinate set) by one generator.
pub fn extend_subgroup(set: &mut HashSet<Vec<i64>>, e: &AbElem) {
    let ord = e.order().expect("finite group") as usize;
    let base: Vec<Vec<i64>> = set.iter().cloned().collect();
    let mut acc = e.group.zero();
    for _ in 1..ord {
        acc = acc.add(e);
        for b in &base {
            let sum = acc.add(&e.group.elem(b.clone()));
            set.insert(sum.coords);
        }
    }
}

/// All automorphisms of a small finite abelian group, canonically sorted.
pub fn enumerate_automorphisms(g: &AbGroup, bound: i64) -> Result<Vec<AbHom>> {
    let order = g
        .order()
        .ok_or_else(|| Error::invalid("cannot enumerate automorphisms of an infinite group"))?;
    if order > bound {
        return Err(Error::bound(format!(
            "group order {} exceeds automorphism enumeration bound {}",
            order, bound
        )));
    }
    let elements = g.elements();
    let ngens = g.ngens();
    // candidate images per generator: elements killed by the generator order
    let candidates: Vec<Vec<&AbElem>> = (0..ngens)
        .map(|i| {
            let m = g.gen_modulus(i);
            elements.iter().filter(|e| e.smul(m).is_zero()).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images: Vec<AbElem> = Vec::new();
    dfs_aut(g, order, &candidates, &mut images, None, &mut out);
    out.sort_by(|a, b| a.matrix.cmp(&b.matrix));
    Ok(out)
}

/// All automorphisms preserving an alternating bicharacter.
pub fn aut_bicharacter_bruteforce(t: &AbGroup, beta: &Bicharacter, bound: i64) -> Result<Vec<AbHom>> {
    let order = t
        .order()
        .ok_or_else(|| Error::invalid("bicharacter group must be finite"))?;
    if order > bound {
        return Err(Error::bound(format!(
            "group order {} exceeds bicharacter brute-force bound {}",
            order, bound
        )));
    }
    let elements = t.elements();
    let ngens = t.ngens();
    let candidates: Vec<Vec<&AbElem>> = (0..ngens)
        .map(|i| {
            let m = t.gen_modulus(i);
            elements.iter().filter(|e| e.smul(m).is_zero()).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images: Vec<AbElem> = Vec::new();
    dfs_aut(t, order, &candidates, &mut images, Some(beta), &mut out);
    out.sort_by(|a, b| a.matrix.cmp(&b.matrix));
    Ok(out)
}

fn dfs_aut(
    g: &AbGroup,
    order: i64,
    candidates: &[Vec<&AbElem>],
    images: &mut Vec<AbElem>,
    beta: Option<&Bicharacter>,
    out: &mut Vec<AbHom>,
) {
    let depth = images.len();
    if depth == candidates.len() {
        // surjectivity (= bijectivity, finite) check
        if generated_subgroup(g, images).len() as i64 == order {
            if let Ok(h) = AbHom::from_images(g, images) {
                out.push(h);
            }
        }
        return;
    }
    // remaining generators can enlarge the image subgroup by at most the
    // product of their orders
    let remaining: i64 = (depth + 1..candidates.len()).map(|i| g.gen_modulus(i)).product();
    for &cand in &candidates[depth] {
        if let Some(b) = beta {
            let gi = g.generator(depth);
            let ok = (0..depth).all(|j| {
                let gj = g.generator(j);
                b.exp(cand, &images[j]) == b.exp(&gi, &gj)
            });
            if !ok {
                continue;
            }
        }
        images.push(cand.clone());
        let span = generated_subgroup(g, images).len() as i64;
        if span * remaining >= order {
            dfs_aut(g, order, candidates, images, beta, out);
        }
        images.pop();
    }
}

/// Alternating bicharacter on a finite group, stored as an exponent matrix:
/// `beta(g_i, g_j) = zeta_L^{exps[i][j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    pub group: AbGroup,
    /// common exponent modulus (lcm of the moduli)
    pub l: i64,
    pub exps: Vec<Vec<i64>>,
}

impl Bicharacter {
    pub fn new(group: AbGroup, exps: Vec<Vec<i64>>) -> Result<Bicharacter> {
        if !group.is_finite() {
            return Err(Error::invalid("bicharacter requires a finite group"));
        }
        let l = group.moduli.iter().fold(1i64, |acc, m| acc.lcm(m));
        let n = group.ngens();
        assert_eq!(exps.len(), n);
        for (i, row) in exps.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (j, &e) in row.iter().enumerate() {
                // bimultiplicativity forces beta(g_i,g_j)^{m_i} = 1
                let mi = group.gen_modulus(i);
                let mj = group.gen_modulus(j);
                if (e * mi) % l != 0 || (e * mj) % l != 0 {
                    return Err(Error::invalid(format!(
                        "exponent {} at ({},{}) incompatible with generator orders",
                        e, i, j
                    )));
                }
                if i == j && e % l != 0 {
                    return Err(Error::invalid("bicharacter is not alternating on a generator"));
                }
            }
        }
        let exps = exps
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.rem_euclid(l)).collect())
            .collect();
        Ok(Bicharacter { group, l, exps })
    }

    /// Exponent k with `beta(u, v) = zeta_L^k`.
    pub fn exp(&self, u: &AbElem, v: &AbElem) -> i64 {
        let n = self.group.ngens();
        let mut acc = 0i64;
        for i in 0..n {
            if u.coords[i] == 0 {
                continue;
            }
            for j in 0..n {
                if v.coords[j] != 0 {
                    acc = (acc + u.coords[i] * self.exps[i][j] % self.l * v.coords[j]) % self.l;
                }
            }
        }
        acc.rem_euclid(self.l)
    }

    pub fn value(&self, u: &AbElem, v: &AbElem) -> CycScalar {
        CycScalar::root_of_unity(self.l as u32, self.exp(u, v))
    }

    pub fn is_alternating(&self) -> bool {
        self.group.elements().iter().all(|t| self.exp(t, t) == 0)
    }

    /// Returns a nonzero radical element if one exists.
    pub fn radical_element(&self) -> Option<AbElem> {
        let gens: Vec<AbElem> = (0..self.group.ngens()).map(|i| self.group.generator(i)).collect();
        self.group
            .elements()
            .into_iter()
            .filter(|t| !t.is_zero())
            .find(|t| gens.iter().all(|g| self.exp(t, g) == 0))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical_element().is_none()
    }

    pub fn preserved_by(&self, mu: &AbHom) -> bool {
        let n = self.group.ngens();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let gi = self.group.generator(i);
                let gj = self.group.generator(j);
                self.exp(&mu.apply(&gi), &mu.apply(&gj)) == self.exp(&gi, &gj)
            })
        })
    }
}

/// `T = (Z_l1)^2 x ... x (Z_lr)^2` with generators in pair order
/// `a_1, b_1, ..., a_r, b_r` and `beta(a_i, b_i)` a primitive l_i-th root.
pub fn standard_bicharacter(l_list: &[i64]) -> (AbGroup, Bicharacter) {
    assert!(l_list.iter().all(|&l| l >= 2));
    let mut moduli = Vec::new();
    for &l in l_list {
        moduli.push(l);
        moduli.push(l);
    }
    let t = AbGroup::new(0, moduli);
    let big_l = l_list.iter().fold(1i64, |acc, l| acc.lcm(l));
    let n = t.ngens();
    let mut exps = vec![vec![0i64; n]; n];
    for (i, &l) in l_list.iter().enumerate() {
        exps[2 * i][2 * i + 1] = big_l / l;
        exps[2 * i + 1][2 * i] = big_l - big_l / l;
    }
    let beta = Bicharacter::new(t.clone(), exps).expect("standard exponents are compatible");
    (t, beta)
}

/// Symplectic decomposition of (T, beta): returns `a_1, b_1, ..., a_r, b_r`
/// with dual pairs of equal order and all cross pairs beta-orthogonal.
pub fn symplectic_basis(t: &AbGroup, beta: &Bicharacter) -> Result<Vec<AbElem>> {
    if let Some(rad) = beta.radical_element() {
        return Err(Error::invalid(format!(
            "bicharacter is degenerate: radical element {:?}",
            rad.coords
        )));
    }
    let mut basis = Vec::new();
    // working complement, shrunk one hyperbolic pair at a time
    let mut complement: Vec<AbElem> =
        t.elements().into_iter().filter(|e| !e.is_zero()).collect();
    while !complement.is_empty() {
        let a = complement
            .iter()
            .max_by_key(|e| e.order().unwrap())
            .unwrap()
            .clone();
        let n = a.order().unwrap();
        // nondegeneracy on the complement yields a partner of full pairing order
        let b = complement
            .iter()
            .find(|e| {
                let k = beta.exp(&a, e);
                beta.l / beta.l.gcd(&k.max(1)) == n && k != 0
            })
            .ok_or_else(|| Error::invalid("no dual partner found; bicharacter degenerate on complement"))?
            .clone();
        let eps_exp = beta.exp(&a, &b); // order n in Z_L
        // project the rest onto the beta-orthogonal complement of <a, b>
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for e in &complement {
            // e' = e - u*a - v*b with beta(e',b) = beta(e',a) = 1
            let kb = beta.exp(e, &b);
            let ka = beta.exp(e, &a);
            let u = solve_congruence(eps_exp, kb, beta.l)
                .ok_or_else(|| Error::invalid("pairing value outside the dual pair's cyclic group"))?;
            let v = solve_congruence(eps_exp, (beta.l - ka) % beta.l, beta.l)
                .ok_or_else(|| Error::invalid("pairing value outside the dual pair's cyclic group"))?;
            let e2 = e.sub(&a.smul(u)).sub(&b.smul(v));
            if !e2.is_zero() && seen.insert(e2.coords.clone()) {
                next.push(e2);
            }
        }
        basis.push(a);
        basis.push(b);
        complement = next;
    }
    // post-conditions of the decomposition
    for i in (0..basis.len()).step_by(2) {
        let (a, b) = (&basis[i], &basis[i + 1]);
        let n = a.order().unwrap();
        if b.order().unwrap() != n {
            return Err(Error::invalid("dual pair orders differ"));
        }
        let k = beta.exp(a, b);
        if beta.l / beta.l.gcd(&k) != n {
            return Err(Error::invalid("pairing order does not match element order"));
        }
        for j in 0..basis.len() {
            if j != i && j != i + 1 {
                if beta.exp(a, &basis[j]) != 0 || beta.exp(b, &basis[j]) != 0 {
                    return Err(Error::invalid("cross pairs not orthogonal"));
                }
            }
        }
    }
    Ok(basis)
}

/// Least nonnegative x with a*x = c (mod l), if any.
pub fn solve_congruence(a: i64, c: i64, l: i64) -> Option<i64> {
    let g = a.gcd(&l);
    if c % g != 0 {
        return None;
    }
    let (a, c, l) = (a / g, c / g, l / g);
    // a now invertible mod l
    let inv = mod_inverse(a.rem_euclid(l), l)?;
    Some((inv * (c.rem_euclid(l))).rem_euclid(l))
}

fn mod_inverse(a: i64, l: i64) -> Option<i64> {
    if l == 1 {
        return Some(0);
    }
    let e = a.extended_gcd(&l);
    if e.gcd != 1 {
        None
    } else {
        Some(e.x.rem_euclid(l))
    }
}

/// Block-matrix membership criterion for Aut(T, beta) when T is a q-group
/// `((Z_{q^a1})^2)^{m1} x ... x ((Z_{q^af})^2)^{mf}` with a_1 < ... < a_f in
/// the standard symplectic presentation.
pub struct MatrixCriterion {
    pub q: i64,
    /// (alpha_i, multiplicity m_i), alpha ascending
    pub levels: Vec<(u32, usize)>,
    pub dim: usize,
}

impl MatrixCriterion {
    pub fn new(t: &AbGroup, beta: &Bicharacter) -> Result<MatrixCriterion> {
        // expect pair order (l_1, l_1, ..., l_r, l_r), ascending prime powers
        let m = &t.moduli;
        if m.is_empty() || m.len() % 2 != 0 {
            return Err(Error::invalid("group is not in symplectic pair form"));
        }
        let mut l_list = Vec::new();
        for c in m.chunks(2) {
            if c[0] != c[1] {
                return Err(Error::invalid("pair moduli differ; not in symplectic form"));
            }
            l_list.push(c[0]);
        }
        let q = smallest_prime_factor(l_list[0]);
        let mut levels: Vec<(u32, usize)> = Vec::new();
        for &l in &l_list {
            let mut v = l;
            let mut alpha = 0u32;
            while v % q == 0 {
                v /= q;
                alpha += 1;
            }
            if v != 1 {
                return Err(Error::invalid(format!("modulus {} is not a power of {}", l, q)));
            }
            match levels.last_mut() {
                Some((a, mult)) if *a == alpha => *mult += 1,
                _ => {
                    if levels.last().map_or(false, |(a, _)| *a > alpha) {
                        return Err(Error::invalid("levels must be ascending"));
                    }
                    levels.push((alpha, 1));
                }
            }
        }
        // require the standard bicharacter
        let (_, std_beta) = standard_bicharacter(&l_list);
        if beta.exps != std_beta.exps {
            return Err(Error::invalid("criterion requires the standard bicharacter"));
        }
        Ok(MatrixCriterion { q, levels, dim: m.len() })
    }

    fn alpha_f(&self) -> u32 {
        self.levels.last().unwrap().0
    }

    fn row_level(&self, r: usize) -> usize {
        let mut acc = 0;
        for (i, &(_, mult)) in self.levels.iter().enumerate() {
            acc += 2 * mult;
            if r < acc {
                return i;
            }
        }
        unreachable!()
    }

    fn j_matrix(&self) -> Vec<Vec<i64>> {
        let qf = self.q.pow(self.alpha_f());
        let mut j = vec![vec![0i64; self.dim]; self.dim];
        let mut pos = 0;
        for &(alpha, mult) in &self.levels {
            let scale = qf / self.q.pow(alpha);
            for _ in 0..mult {
                j[pos][pos + 1] = scale;
                j[pos + 1][pos] = -scale;
                pos += 2;
            }
        }
        j
    }

    /// Membership: entries of row block i read modulo q^{alpha_i}; blocks
    /// A_ij with i > j vanish modulo q^{alpha_i - alpha_j}; tA J A = J
    /// modulo q^{alpha_f}.
    pub fn accepts(&self, a: &[Vec<i64>]) -> bool {
        let n = self.dim;
        let qf = self.q.pow(self.alpha_f());
        for r in 0..n {
            let li = self.row_level(r);
            let qi = self.q.pow(self.levels[li].0);
            for c in 0..n {
                if a[r][c] < 0 || a[r][c] >= qi {
                    return false;
                }
                let lj = self.row_level(c);
                if li > lj {
                    let need = self.q.pow(self.levels[li].0 - self.levels[lj].0);
                    if a[r][c] % need != 0 {
                        return false;
                    }
                }
            }
        }
        let j = self.j_matrix();
        for x in 0..n {
            for y in 0..n {
                let mut acc = 0i64;
                for p in 0..n {
                    for s in 0..n {
                        acc = (acc + a[p][x] * j[p][s] % qf * a[s][y]) % qf;
                    }
                }
                if (acc - j[x][y]).rem_euclid(qf) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Exact order of Aut(T, beta) by enumerating the admissible entries.
    pub fn count(&self) -> u64 {
        let n = self.dim;
        // per-entry admissible values
        let mut choices: Vec<Vec<i64>> = Vec::with_capacity(n * n);
        for r in 0..n {
            let li = self.row_level(r);
            let qi = self.q.pow(self.levels[li].0);
            for c in 0..n {
                let lj = self.row_level(c);
                let step = if li > lj { self.q.pow(self.levels[li].0 - self.levels[lj].0) } else { 1 };
                choices.push((0..qi).step_by(step as usize).collect());
            }
        }
        let mut a = vec![vec![0i64; n]; n];
        let mut idx = vec![0usize; n * n];
        let mut count = 0u64;
        loop {
            for r in 0..n {
                for c in 0..n {
                    a[r][c] = choices[r * n + c][idx[r * n + c]];
                }
            }
            if self.accepts(&a) {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == n * n {
                    return count;
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}

fn smallest_prime_factor(n: i64) -> i64 {
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 1;
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_examples() {
        let z = vec![vec![0i64; 2]; 2];
        let s = smith_normal_form(&z);
        assert_eq!(s.d, vec![0, 0]);
        assert_eq!(s.u, ident(2));
        assert_eq!(s.v, ident(2));

        let m = vec![vec![2, 0], vec![0, 3]];
        let s = smith_normal_form(&m);
        assert_eq!(s.d, vec![1, 6]);
        // U M V = D and U U_inv = I
        for i in 0..2 {
            for j in 0..2 {
                let umv: i64 = (0..2)
                    .map(|k| (0..2).map(|l| s.u[i][k] * m[k][l] * s.v[l][j]).sum::<i64>())
                    .sum();
                assert_eq!(umv, if i == j { s.d[i] } else { 0 });
                let uui: i64 = (0..2).map(|k| s.u[i][k] * s.u_inv[k][j]).sum();
                assert_eq!(uui, if i == j { 1 } else { 0 });
            }
        }

        let s = smith_normal_form(&[vec![2i64]]);
        assert_eq!(s.d, vec![2]);
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_presentation(2, &[vec![2, 0], vec![0, 2]]);
        assert_eq!(q.group, AbGroup::new(0, vec![2, 2]));

        let q = quotient_presentation(3, &[]);
        assert_eq!(q.group, AbGroup::free(3));
        assert_eq!(q.projection.matrix, ident(3));

        let q = quotient_presentation(1, &[vec![1]]);
        assert_eq!(q.group, AbGroup::free(0));
    }

    #[test]
    fn quotient_lift_is_section() {
        let q = quotient_presentation(3, &[vec![2, 0, 4], vec![0, 6, 3]]);
        let src = AbGroup::free(3);
        for (j, l) in q.lift.iter().enumerate() {
            let img = q.projection.apply(&src.elem(l.clone()));
            assert_eq!(img, q.group.generator(j), "lift column {} not a section", j);
        }
    }

    #[test]
    fn automorphism_counts() {
        let z2 = AbGroup::new(0, vec![2]);
        assert_eq!(enumerate_automorphisms(&z2, DEFAULT_AUT_BOUND).unwrap().len(), 1);
        let z3 = AbGroup::new(0, vec![3]);
        assert_eq!(enumerate_automorphisms(&z3, DEFAULT_AUT_BOUND).unwrap().len(), 2);
        let z2cubed = AbGroup::new(0, vec![2, 2, 2]);
        let auts = enumerate_automorphisms(&z2cubed, DEFAULT_AUT_BOUND).unwrap();
        assert_eq!(auts.len(), 168);
        for a in &auts {
            assert!(a.is_automorphism());
        }
    }

    #[test]
    fn automorphism_bound_respected() {
        let big = AbGroup::new(0, vec![2; 9]);
        assert!(matches!(
            enumerate_automorphisms(&big, DEFAULT_AUT_BOUND),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn standard_bicharacter_values() {
        let (t, beta) = standard_bicharacter(&[2]);
        let a = t.generator(0);
        let b = t.generator(1);
        assert_eq!(beta.value(&a, &b), CycScalar::from_int(2, -1));
        assert!(beta.is_alternating());
        assert!(beta.is_nondegenerate());

        let (t3, beta3) = standard_bicharacter(&[3]);
        let a = t3.generator(0).smul(2);
        let b = t3.generator(1);
        assert_eq!(beta3.value(&a, &b), CycScalar::root_of_unity(3, 2));
    }

    #[test]
    fn bicharacter_automorphism_orders() {
        let (t, beta) = standard_bicharacter(&[2]);
        assert_eq!(aut_bicharacter_bruteforce(&t, &beta, DEFAULT_BICHAR_BOUND).unwrap().len(), 6);
        let (t, beta) = standard_bicharacter(&[3]);
        assert_eq!(aut_bicharacter_bruteforce(&t, &beta, DEFAULT_BICHAR_BOUND).unwrap().len(), 24);
    }

    #[test]
    fn bicharacter_group_closure() {
        let (t, beta) = standard_bicharacter(&[2, 2]);
        let auts = aut_bicharacter_bruteforce(&t, &beta, DEFAULT_BICHAR_BOUND).unwrap();
        assert_eq!(auts.len(), 720);
        // closed under composition: spot-check a few pairs
        let set: HashSet<Vec<Vec<i64>>> = auts.iter().map(|a| a.matrix.clone()).collect();
        for i in (0..auts.len()).step_by(97) {
            for j in (0..auts.len()).step_by(101) {
                let c = auts[i].compose(&auts[j]);
                assert!(set.contains(&c.matrix));
            }
        }
        assert!(set.contains(&AbHom::identity(&t).matrix));
    }

    #[test]
    fn matrix_criterion_matches_bruteforce() {
        for l_list in [vec![2i64], vec![3], vec![4]] {
            let (t, beta) = standard_bicharacter(&l_list);
            let crit = MatrixCriterion::new(&t, &beta).unwrap();
            let bf = aut_bicharacter_bruteforce(&t, &beta, DEFAULT_BICHAR_BOUND).unwrap().len();
            assert_eq!(crit.count() as usize, bf, "l_list {:?}", l_list);
        }
        let (t, beta) = standard_bicharacter(&[4]);
        let crit = MatrixCriterion::new(&t, &beta).unwrap();
        assert_eq!(crit.count(), 48);
        assert!(crit.accepts(&[vec![1, 0], vec![0, 1]]));
    }

    #[test]
    fn symplectic_basis_recovery() {
        let (t, beta) = standard_bicharacter(&[2, 2]);
        let basis = symplectic_basis(&t, &beta).unwrap();
        assert_eq!(basis.len(), 4);

        // scramble by an automorphism and recover
        let auts = aut_bicharacter_bruteforce(&t, &beta, DEFAULT_BICHAR_BOUND).unwrap();
        let mu = &auts[auts.len() / 2];
        let scrambled_exps: Vec<Vec<i64>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| beta.exp(&mu.apply(&t.generator(i)), &mu.apply(&t.generator(j))))
                    .collect()
            })
            .collect();
        let beta2 = Bicharacter::new(t.clone(), scrambled_exps).unwrap();
        assert!(symplectic_basis(&t, &beta2).is_ok());

        // degenerate: trivial bicharacter on Z_2^2
        let z22 = AbGroup::new(0, vec![2, 2]);
        let triv = Bicharacter::new(z22.clone(), vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert!(symplectic_basis(&z22, &triv).is_err());
    }

    #[test]
    fn solve_in_group_examples() {
        let g = AbGroup::new(1, vec![4]);
        let a = g.elem(vec![2, 1]);
        let b = g.elem(vec![1, 3]);
        let target = g.elem(vec![0, 1]);
        let x = solve_in_group(&g, &[a.clone(), b.clone()], &target).unwrap();
        assert_eq!(a.smul(x[0]).add(&b.smul(x[1])), target);
        // unsolvable: target with odd free coordinate from even generators
        let g2 = AbGroup::free(1);
        let even = g2.elem(vec![2]);
        assert!(solve_in_group(&g2, &[even], &g2.elem(vec![1])).is_none());
    }

    #[test]
    fn hom_well_definedness() {
        let z2 = AbGroup::new(0, vec![2]);
        let z4 = AbGroup::new(0, vec![4]);
        // Z_2 -> Z_4 sending generator to an order-4 element: ill-defined
        assert!(AbHom::new(z2.clone(), z4.clone(), vec![vec![1]]).is_err());
        assert!(AbHom::new(z2.clone(), z4.clone(), vec![vec![2]]).is_ok());
    }

    #[test]
    fn normal_form_isomorphism() {
        let a = AbGroup::new(0, vec![2, 3]);
        let b = AbGroup::new(0, vec![6]);
        assert!(a.is_isomorphic_to(&b));
        let c = AbGroup::new(0, vec![4]);
        assert!(!a.is_isomorphic_to(&c));
    }
}
