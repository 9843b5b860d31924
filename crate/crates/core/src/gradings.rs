//! Gradings on adapted bases: validation, supports, universal groups,
//! coarsenings, and constructors for every fine grading under study.

use std::collections::HashSet;
use std::sync::Arc;

use crate::abgroups::{quotient_presentation, AbElem, AbGroup, AbHom};
use crate::algebras::{
    albert_algebra, albert_nu_basis, cayley_cd_basis, cayley_good_basis, matrix_algebra_mdk,
    okubo_algebra, rebase, AlgElement, Albert, AlgebraRef, MatrixAlgebraMDk, NuAlbert,
};
use crate::linalg::Mat;
use crate::scalars::{rational_nth_root, CycScalar};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Grading {
    pub algebra: AlgebraRef,
    pub group: AbGroup,
    /// degree of each basis vector
    pub degree: Vec<AbElem>,
    pub name: Option<String>,
}

pub type GradingRef = Arc<Grading>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportEntry {
    pub degree: AbElem,
    pub dim: usize,
    pub basis: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SupportTable {
    pub entries: Vec<SupportEntry>,
}

impl SupportTable {
    pub fn index_of(&self, g: &AbElem) -> Option<usize> {
        self.entries.iter().position(|e| &e.degree == g)
    }
}

/// Validates the homogeneity law deg(b_i b_j) = deg(b_i) + deg(b_j) over all
/// basis pairs; a violation reports the offending triple.
pub fn grading_make(
    algebra: &AlgebraRef,
    group: &AbGroup,
    degree: Vec<AbElem>,
    name: Option<String>,
) -> Result<GradingRef> {
    let dim = algebra.dim();
    if degree.len() != dim {
        return Err(Error::invalid("degree map must cover every basis vector"));
    }
    for d in &degree {
        if d.group != *group {
            return Err(Error::invalid("degree lies outside the grading group"));
        }
    }
    for i in 0..dim {
        for j in 0..dim {
            let expected = degree[i].add(&degree[j]);
            for (k, _) in &algebra.constants[i * dim + j] {
                if degree[*k] != expected {
                    return Err(Error::invalid(format!(
                        "homogeneity violated at ({}, {}): product involves {} of degree {} != {}",
                        algebra.labels[i],
                        algebra.labels[j],
                        algebra.labels[*k],
                        degree[*k],
                        expected
                    )));
                }
            }
        }
    }
    Ok(Arc::new(Grading { algebra: algebra.clone(), group: group.clone(), degree, name }))
}

pub fn support(g: &Grading) -> SupportTable {
    let mut entries: Vec<SupportEntry> = Vec::new();
    for (i, d) in g.degree.iter().enumerate() {
        match entries.iter_mut().find(|e| &e.degree == d) {
            Some(e) => {
                e.dim += 1;
                e.basis.push(i);
            }
            None => entries.push(SupportEntry { degree: d.clone(), dim: 1, basis: vec![i] }),
        }
    }
    entries.sort_by(|a, b| a.degree.coords.cmp(&b.degree.coords));
    SupportTable { entries }
}

pub struct UniversalResult {
    pub group: AbGroup,
    /// (support degree, its image in the universal group), aligned with
    /// the sorted support table
    pub embedding: Vec<(AbElem, AbElem)>,
    /// the same algebra re-graded over the universal group
    pub regraded: GradingRef,
    /// lift[j] expresses universal generator j as a Z-combination of the
    /// embedded support elements (indexed as in the support table)
    pub lift: Vec<Vec<i64>>,
}

/// Universal group: free abelian on the support modulo the relations
/// s + t - u for every pair of support elements with 0 != A_s A_t <= A_u.
/// Relations are harvested from basis-pair products, which span all
/// component products.
pub fn universal_abelian_group(g: &Grading) -> Result<UniversalResult> {
    let table = support(g);
    let m = table.entries.len();
    let idx_of = |d: &AbElem| table.index_of(d).expect("support is closed over degrees");
    let dim = g.algebra.dim();
    let mut relations: HashSet<Vec<i64>> = HashSet::new();
    for i in 0..dim {
        for j in 0..dim {
            let prod = &g.algebra.constants[i * dim + j];
            if prod.is_empty() {
                continue;
            }
            let s = idx_of(&g.degree[i]);
            let t = idx_of(&g.degree[j]);
            let u = idx_of(&g.degree[prod[0].0]);
            let mut rel = vec![0i64; m];
            rel[s] += 1;
            rel[t] += 1;
            rel[u] -= 1;
            if rel.iter().any(|&c| c != 0) {
                relations.insert(rel);
            }
        }
    }
    let mut rels: Vec<Vec<i64>> = relations.into_iter().collect();
    rels.sort();
    let pres = quotient_presentation(m, &rels);
    let free = AbGroup::free(m);
    let embedding: Vec<(AbElem, AbElem)> = table
        .entries
        .iter()
        .enumerate()
        .map(|(s, e)| {
            let mut coords = vec![0i64; m];
            coords[s] = 1;
            (e.degree.clone(), pres.projection.apply(&free.elem(coords)))
        })
        .collect();
    let degree = g
        .degree
        .iter()
        .map(|d| embedding[idx_of(d)].1.clone())
        .collect();
    let regraded = grading_make(&g.algebra, &pres.group, degree, g.name.clone())?;
    Ok(UniversalResult { group: pres.group, embedding, regraded, lift: pres.lift })
}

/// Coarsening along a group homomorphism alpha.
pub fn induce(g: &Grading, alpha: &AbHom) -> Result<GradingRef> {
    if alpha.source != g.group {
        return Err(Error::invalid("homomorphism source must be the grading group"));
    }
    let degree = g.degree.iter().map(|d| alpha.apply(d)).collect();
    grading_make(&g.algebra, &alpha.target, degree, g.name.clone())
}

fn z2k(k: usize) -> AbGroup {
    AbGroup::new(0, vec![2; k])
}

/// Cartan grading of the Cayley algebra over Z^2: torus weights
/// deg u_1 = (1,0), deg u_2 = (0,1), deg u_3 = -(1,1), deg v_i = -deg u_i.
pub fn cartan_cayley_grading() -> Result<GradingRef> {
    let c = cayley_good_basis()?;
    let g = AbGroup::free(2);
    let eps = [[1i64, 0], [0, 1], [-1, -1]];
    let mut degree = vec![g.zero(), g.zero()];
    for e in eps {
        degree.push(g.elem(e.to_vec()));
    }
    for e in eps {
        degree.push(g.elem(e.to_vec()).neg());
    }
    grading_make(&c, &g, degree, Some("cartan_cayley".into()))
}

/// Z_2^3 grading of the Cayley algebra from the Cayley-Dickson doubling:
/// deg w_i = c_i, so the basis word with bit pattern b has degree b.
pub fn cd_cayley_grading() -> Result<GradingRef> {
    let c = cayley_cd_basis()?;
    let g = z2k(3);
    let degree = (0..8u8)
        .map(|b| g.elem(vec![(b & 1) as i64, ((b >> 1) & 1) as i64, ((b >> 2) & 1) as i64]))
        .collect();
    grading_make(&c, &g, degree, Some("cd_cayley".into()))
}

/// The fine grading on M_n(F) = M_k tensor D with support group
/// Z^{k-1} x T: deg(E_ij tensor X_t) = h_i - h_j + t where h_1 = 0 and
/// h_i is the (i-1)-th free generator.
pub fn gamma_m_grading(l_list: &[i64], k: usize) -> Result<(GradingRef, MatrixAlgebraMDk)> {
    if k == 0 {
        return Err(Error::invalid("gamma_M requires k >= 1"));
    }
    let m = matrix_algebra_mdk(l_list, k)?;
    let g = AbGroup::new(k - 1, m.pauli.t.moduli.clone());
    let mut degree = Vec::with_capacity(m.algebra.dim());
    let torder = m.pauli.t.order().unwrap() as usize;
    for i in 0..k {
        for j in 0..k {
            for tix in 0..torder {
                let t = m.pauli.elem_at(tix);
                let mut coords = vec![0i64; k - 1];
                if i > 0 {
                    coords[i - 1] += 1;
                }
                if j > 0 {
                    coords[j - 1] -= 1;
                }
                coords.extend(&t.coords);
                degree.push(g.elem(coords));
            }
        }
    }
    let grading = grading_make(
        &m.algebra,
        &g,
        degree,
        Some(format!("gamma_M({:?},{})", l_list, k)),
    )?;
    Ok((grading, m))
}

/// Cartan grading of the Albert algebra over Z^4, with torus weights
/// a_1, a_2, a_3 (a_1+a_2+a_3 = 0) on the first two coordinates and
/// g_1, g_2, g_3 (g_1+g_2+g_3 = 0) on the last two.
pub fn albert_cartan_grading() -> Result<(GradingRef, Albert)> {
    let c = cayley_good_basis()?;
    let albert = albert_algebra(&c)?;
    let g = AbGroup::free(4);
    let a = |i: usize| -> AbElem {
        let coords = [[1i64, 0, 0, 0], [0, 1, 0, 0], [-1, -1, 0, 0]][(i - 1) % 3];
        g.elem(coords.to_vec())
    };
    let gg = |i: usize| -> AbElem {
        let coords = [[0i64, 0, 1, 0], [0, 0, 0, 1], [0, 0, -1, -1]][(i - 1) % 3];
        g.elem(coords.to_vec())
    };
    let mut degree = vec![g.zero(), g.zero(), g.zero()];
    for i in 1..=3usize {
        // deg iota_i(u_m); the v's carry the negated degrees
        let iu = |m: usize| -> AbElem {
            if (m + 3 - i) % 3 == 0 {
                gg(i)
            } else if (m + 3 - i) % 3 == 1 {
                // m = i + 1
                a(i + 2).add(&gg(i + 1))
            } else {
                // m = i + 2
                a(i + 1).neg().add(&gg(i + 2))
            }
        };
        degree.push(a(i));
        degree.push(a(i).neg());
        for m in 1..=3 {
            degree.push(iu(m));
        }
        for m in 1..=3 {
            degree.push(iu(m).neg());
        }
    }
    let grading = grading_make(&albert.algebra, &g, degree, Some("albert_cartan".into()))?;
    Ok((grading, albert))
}

/// Z_2^5 grading of the Albert algebra over the Cayley-Dickson Cayley
/// algebra: deg E_i = 0, deg iota_1(x) = (1,0,deg x), deg iota_2(x) =
/// (0,1,deg x), deg iota_3(x) = (1,1,deg x).
pub fn albert_z25_grading() -> Result<(GradingRef, Albert)> {
    let c = cayley_cd_basis()?;
    let albert = albert_algebra(&c)?;
    let g = z2k(5);
    let mut degree = vec![g.zero(), g.zero(), g.zero()];
    let ab = [[1i64, 0], [0, 1], [1, 1]];
    for i in 0..3 {
        for b in 0..8usize {
            let coords = vec![
                ab[i][0],
                ab[i][1],
                (b & 1) as i64,
                ((b >> 1) & 1) as i64,
                ((b >> 2) & 1) as i64,
            ];
            degree.push(g.elem(coords));
        }
    }
    let grading = grading_make(&albert.algebra, &g, degree, Some("albert_z25".into()))?;
    Ok((grading, albert))
}

/// Z x Z_2^3 grading on the nu-basis of the Albert algebra:
/// deg S^+- = (+-2, 0), deg nu(w) = (0, deg w), deg nu_+-(x) = (+-1, deg x).
pub fn albert_zz23_grading() -> Result<(GradingRef, NuAlbert)> {
    let c = cayley_cd_basis()?;
    let albert = albert_algebra(&c)?;
    let nu = albert_nu_basis(albert)?;
    let g = AbGroup::new(1, vec![2, 2, 2]);
    let cd_deg = |b: usize| -> Vec<i64> {
        vec![(b & 1) as i64, ((b >> 1) & 1) as i64, ((b >> 2) & 1) as i64]
    };
    let mut degree = vec![g.zero(), g.zero()];
    degree.push(g.elem(vec![2, 0, 0, 0]));
    degree.push(g.elem(vec![-2, 0, 0, 0]));
    for b in 1..8 {
        let mut coords = vec![0i64];
        coords.extend(cd_deg(b));
        degree.push(g.elem(coords));
    }
    for sign in [1i64, -1] {
        for b in 0..8 {
            let mut coords = vec![sign];
            coords.extend(cd_deg(b));
            degree.push(g.elem(coords));
        }
    }
    let grading = grading_make(&nu.algebra, &g, degree, Some("albert_zz23".into()))?;
    Ok((grading, nu))
}

/// Degrees of the good-basis elements in the Z_3^2 grading of the Okubo
/// algebra, derived by closure from deg e_1 = (1,0), deg u_1 = (0,1) and
/// the product table.
pub fn okubo_z3_degrees() -> Result<Vec<[i64; 2]>> {
    let o = okubo_algebra()?;
    let dim = o.dim();
    let mut deg: Vec<Option<[i64; 2]>> = vec![None; dim];
    deg[0] = Some([1, 0]); // e_1
    deg[2] = Some([0, 1]); // u_1
    loop {
        let mut progress = false;
        for i in 0..dim {
            for j in 0..dim {
                let prod = &o.constants[i * dim + j];
                if prod.is_empty() {
                    continue;
                }
                let k = prod[0].0;
                if let (Some(di), Some(dj)) = (deg[i], deg[j]) {
                    let dk = [(di[0] + dj[0]) % 3, (di[1] + dj[1]) % 3];
                    match deg[k] {
                        None => {
                            deg[k] = Some(dk);
                            progress = true;
                        }
                        Some(existing) => {
                            if existing != dk {
                                return Err(Error::invalid(format!(
                                    "inconsistent Okubo degrees at ({}, {})",
                                    o.labels[i], o.labels[j]
                                )));
                            }
                        }
                    }
                }
            }
        }
        if !progress {
            break;
        }
    }
    deg.into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::invalid("Okubo degree closure did not reach every basis element"))
}

pub struct Z33Data {
    pub grading: GradingRef,
    pub albert: Albert,
    /// change of basis: Albert coords = b * eigenbasis coords
    pub b: Mat,
    /// Okubo Z_3^2 degrees of the good-basis elements
    pub okubo_degrees: Vec<[i64; 2]>,
}

/// Z_3^3 grading of the Albert algebra on the simultaneous eigenbasis
/// F_k = sum_i omega^{-ik} E_i and W_{z,k} = (1/2) sum_i omega^{-ik}
/// iota~_i(z), z running over the Okubo-homogeneous good-basis elements.
/// Each eigenvector is cube-normalized: X^3 is a rational perfect cube
/// times 1, and X is divided by the rational cube root, so every basis
/// element satisfies X^3 = 1.
pub fn albert_z33_grading() -> Result<Z33Data> {
    let c = cayley_good_basis()?;
    let okdeg = okubo_z3_degrees()?;
    let albert = albert_algebra(&c)?;
    let n = albert.algebra.conductor;
    let w = CycScalar::root_of_unity(3, 1).embed(n);
    let half = CycScalar::from_rational(n, num::BigRational::new(1.into(), 2.into()));
    let one = AlgElement::one(&albert.algebra);
    let g = AbGroup::new(0, vec![3, 3, 3]);
    let mut basis = Vec::with_capacity(27);
    let mut labels = Vec::with_capacity(27);
    let mut degree = Vec::with_capacity(27);
    let normalize = |x: AlgElement, label: &str| -> Result<AlgElement> {
        let cube = x.mul(&x).mul(&x);
        let nu = cube.coords[0].clone();
        if cube != one.scale(&nu) {
            return Err(Error::invalid(format!("{} does not cube to a scalar", label)));
        }
        let r = nu
            .as_rational()
            .ok_or_else(|| Error::invalid(format!("cube of {} is not rational", label)))?;
        let root = rational_nth_root(&r, 3)
            .filter(|r| !num::Zero::is_zero(r))
            .ok_or_else(|| {
                Error::invalid(format!("cube of {} is not a nonzero rational perfect cube", label))
            })?;
        let inv = CycScalar::from_rational(n, num::BigRational::from(num::BigInt::from(1)) / root);
        Ok(x.scale(&inv))
    };
    for k in 0..3i64 {
        let mut f = AlgElement::zero(&albert.algebra);
        for i in 1..=3i64 {
            f = f.add(&albert.e(i as usize).scale(&w.pow((-i * k).rem_euclid(3)).unwrap()));
        }
        let label = format!("F{}", k);
        basis.push(normalize(f, &label)?);
        labels.push(label);
        degree.push(g.elem(vec![0, 0, k]));
    }
    for z in 0..8usize {
        let zc = AlgElement::basis(&c, z);
        for k in 0..3i64 {
            let mut x = AlgElement::zero(&albert.algebra);
            for i in 1..=3i64 {
                x = x.add(
                    &albert
                        .iota_tilde(i as usize, &zc)
                        .scale(&w.pow((-i * k).rem_euclid(3)).unwrap()),
                );
            }
            let x = x.scale(&half);
            let label = format!("W({},{})", c.labels[z], k);
            basis.push(normalize(x, &label)?);
            labels.push(label);
            degree.push(g.elem(vec![okdeg[z][0], okdeg[z][1], k]));
        }
    }
    let (algebra, b) = rebase(&albert.algebra, &basis, labels, "albert_z33")?;
    let grading = grading_make(&algebra, &g, degree, Some("albert_z33".into()))?;
    Ok(Z33Data { grading, albert, b, okubo_degrees: okdeg })
}

pub const BUILTIN_NAMES: [&str; 7] = [
    "cartan_cayley",
    "cd_cayley",
    "gamma_M",
    "albert_cartan",
    "albert_z25",
    "albert_zz23",
    "albert_z33",
];

#[derive(Clone, Debug, Default)]
pub struct GradingParams {
    pub l_list: Vec<i64>,
    pub k: usize,
}

pub fn builtin_grading(name: &str, params: Option<&GradingParams>) -> Result<GradingRef> {
    match name {
        "cartan_cayley" => cartan_cayley_grading(),
        "cd_cayley" => cd_cayley_grading(),
        "gamma_M" => {
            let p = params.ok_or_else(|| Error::invalid("gamma_M requires l_list and k"))?;
            gamma_m_grading(&p.l_list, p.k).map(|(g, _)| g)
        }
        "albert_cartan" => albert_cartan_grading().map(|(g, _)| g),
        "albert_z25" => albert_z25_grading().map(|(g, _)| g),
        "albert_zz23" => albert_zz23_grading().map(|(g, _)| g),
        "albert_z33" => albert_z33_grading().map(|d| d.grading),
        _ => Err(Error::invalid(format!("unknown grading name: {}", name))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{u_idx, v_idx};

    #[test]
    fn trivial_grading_valid() {
        let c = cayley_good_basis().unwrap();
        let g = AbGroup::free(1);
        let degree = vec![g.zero(); 8];
        assert!(grading_make(&c, &g, degree, None).is_ok());
    }

    #[test]
    fn cartan_flipped_degree_rejected() {
        let c = cayley_good_basis().unwrap();
        let g = AbGroup::free(2);
        let eps = [[1i64, 0], [0, 1], [-1, -1]];
        let mut degree = vec![g.zero(), g.zero()];
        for e in eps {
            degree.push(g.elem(e.to_vec()));
        }
        for e in eps {
            degree.push(g.elem(e.to_vec()).neg());
        }
        degree[u_idx(1)] = degree[u_idx(1)].neg();
        let err = grading_make(&c, &g, degree, None).unwrap_err();
        assert!(err.to_string().contains("u1"));
    }

    #[test]
    fn cartan_cayley_support() {
        let g = cartan_cayley_grading().unwrap();
        let t = support(&g);
        assert_eq!(t.entries.len(), 7);
        let zero_entry = t.entries.iter().find(|e| e.degree == g.group.zero()).unwrap();
        assert_eq!(zero_entry.dim, 2);
        assert!(t.entries.iter().filter(|e| e.dim == 1).count() == 6);
    }

    #[test]
    fn cd_cayley_support_and_degrees() {
        let g = cd_cayley_grading().unwrap();
        let t = support(&g);
        assert_eq!(t.entries.len(), 8);
        assert!(t.entries.iter().all(|e| e.dim == 1));
        // deg(w1w2) = c_1 + c_2: basis index 3
        assert_eq!(g.degree[3], g.group.elem(vec![1, 1, 0]));
    }

    #[test]
    fn universal_groups_match_declared() {
        let g = cartan_cayley_grading().unwrap();
        let u = universal_abelian_group(&g).unwrap();
        assert!(u.group.is_isomorphic_to(&AbGroup::free(2)));

        let g = cd_cayley_grading().unwrap();
        let u = universal_abelian_group(&g).unwrap();
        assert!(u.group.is_isomorphic_to(&AbGroup::new(0, vec![2, 2, 2])));

        let (g, _) = gamma_m_grading(&[2], 2).unwrap();
        let u = universal_abelian_group(&g).unwrap();
        assert!(u.group.is_isomorphic_to(&AbGroup::new(1, vec![2, 2])));
    }

    #[test]
    fn induce_examples() {
        let g = cartan_cayley_grading().unwrap();
        let id = AbHom::identity(&g.group);
        let same = induce(&g, &id).unwrap();
        assert_eq!(same.degree, g.degree);
        // mod-2 reduction is a valid coarsening
        let z22 = AbGroup::new(0, vec![2, 2]);
        let alpha =
            AbHom::new(g.group.clone(), z22.clone(), vec![vec![1, 0], vec![0, 1]]).unwrap();
        let coarse = induce(&g, &alpha).unwrap();
        assert_eq!(coarse.group, z22);
        // collapse to the trivial group's worth of degrees: Z^2 -> Z, both to 0
        let z = AbGroup::free(1);
        let alpha = AbHom::new(g.group.clone(), z.clone(), vec![vec![0, 0]]).unwrap();
        let trivial = induce(&g, &alpha).unwrap();
        assert!(trivial.degree.iter().all(|d| d.is_zero()));
    }

    #[test]
    fn coarsening_monotonicity() {
        let g = cartan_cayley_grading().unwrap();
        let u_fine = universal_abelian_group(&g).unwrap();
        let z22 = AbGroup::new(0, vec![2, 2]);
        let alpha =
            AbHom::new(g.group.clone(), z22.clone(), vec![vec![1, 0], vec![0, 1]]).unwrap();
        let coarse = induce(&g, &alpha).unwrap();
        let u_coarse = universal_abelian_group(&coarse).unwrap();
        assert!(u_coarse.group.ngens() <= u_fine.group.ngens());
    }

    #[test]
    fn albert_cartan_support() {
        let (g, _) = albert_cartan_grading().unwrap();
        let t = support(&g);
        assert_eq!(t.entries.len(), 25);
        let zero_entry = t.entries.iter().find(|e| e.degree == g.group.zero()).unwrap();
        assert_eq!(zero_entry.dim, 3);
        assert_eq!(t.entries.iter().filter(|e| e.dim == 1).count(), 24);
        let u = universal_abelian_group(&g).unwrap();
        assert!(u.group.is_isomorphic_to(&AbGroup::free(4)));
    }

    #[test]
    fn albert_z25_degrees() {
        let (g, _) = albert_z25_grading().unwrap();
        // deg iota_3(w_1) = a + b + c_1
        let idx = crate::algebras::albert_iota_idx(3, 1);
        assert_eq!(g.degree[idx], g.group.elem(vec![1, 1, 1, 0, 0]));
        let u = universal_abelian_group(&g).unwrap();
        assert!(u.group.is_isomorphic_to(&AbGroup::new(0, vec![2; 5])));
    }

    #[test]
    fn albert_zz23_valid() {
        let (g, _) = albert_zz23_grading().unwrap();
        let u = universal_abelian_group(&g).unwrap();
        assert!(u.group.is_isomorphic_to(&AbGroup::new(1, vec![2, 2, 2])));
    }

    #[test]
    fn okubo_degree_table() {
        let d = okubo_z3_degrees().unwrap();
        // e_1 (1,0), e_2 (2,0), u_1 (0,1), u_2 (1,1), u_3 (2,1),
        // v_1 (0,2), v_2 (2,2), v_3 (1,2)
        assert_eq!(d[0], [1, 0]);
        assert_eq!(d[1], [2, 0]);
        assert_eq!(d[u_idx(1)], [0, 1]);
        assert_eq!(d[u_idx(2)], [1, 1]);
        assert_eq!(d[u_idx(3)], [2, 1]);
        assert_eq!(d[v_idx(1)], [0, 2]);
        assert_eq!(d[v_idx(2)], [2, 2]);
        assert_eq!(d[v_idx(3)], [1, 2]);
    }

    #[test]
    fn albert_z33_fine_and_invertible() {
        let data = albert_z33_grading().unwrap();
        let g = &data.grading;
        let t = support(g);
        assert_eq!(t.entries.len(), 27);
        assert!(t.entries.iter().all(|e| e.dim == 1));
        let u = universal_abelian_group(g).unwrap();
        assert!(u.group.is_isomorphic_to(&AbGroup::new(0, vec![3, 3, 3])));
        // every basis element is cube-normalized to X^3 = 1
        let a = &g.algebra;
        let one = AlgElement::one(a);
        for i in 0..27 {
            let x = AlgElement::basis(a, i);
            assert_eq!(x.mul(&x).mul(&x), one, "basis {} does not cube to 1", a.labels[i]);
        }
    }
}
