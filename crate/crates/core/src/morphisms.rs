//! Algebra automorphisms: certification, graded-automorphism checking, and
//! the explicit automorphism families used as Weyl-group generators.

use num::{BigInt, BigRational, One};

use crate::abgroups::{solve_congruence, AbElem, AbHom};
use crate::algebras::{
    albert_iota_idx, cayley_good_basis, conjugate, AlgElement, Albert, AlgebraRef,
    MatrixAlgebraMDk, NuAlbert, PauliAlgebra, TAU_PERM,
};
use crate::gradings::{
    albert_cartan_grading, albert_z33_grading, albert_zz23_grading, support, universal_abelian_group,
    Grading, GradingRef, Z33Data,
};
use crate::linalg::{Mat, Span};
use crate::scalars::CycScalar;
use crate::weyl::{induced_universal_hom, SupportPerm};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct AlgAutomorphism {
    pub owner: AlgebraRef,
    /// action on basis coordinates: new coords = matrix * coords
    pub matrix: Mat,
    certified: bool,
}

impl PartialEq for AlgAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.owner.name == other.owner.name && self.matrix == other.matrix
    }
}

impl AlgAutomorphism {
    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn apply(&self, x: &AlgElement) -> AlgElement {
        AlgElement { algebra: x.algebra.clone(), coords: self.matrix.apply(&x.coords) }
    }

    /// self after other.
    pub fn compose(&self, other: &AlgAutomorphism) -> AlgAutomorphism {
        AlgAutomorphism {
            owner: self.owner.clone(),
            matrix: self.matrix.mul(&other.matrix),
            certified: self.certified && other.certified,
        }
    }

    pub fn inverse(&self) -> AlgAutomorphism {
        AlgAutomorphism {
            owner: self.owner.clone(),
            matrix: self.matrix.inverse().expect("certified automorphisms are invertible"),
            certified: self.certified,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Mat::identity(self.owner.dim(), self.matrix.conductor)
    }

    /// Multiplicative order, up to the given bound.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut p = self.matrix.clone();
        let id = Mat::identity(self.owner.dim(), self.matrix.conductor);
        for k in 1..=bound {
            if p == id {
                return Some(k);
            }
            p = p.mul(&self.matrix);
        }
        None
    }
}

/// Certification gate: checks invertibility and multiplicativity on all
/// basis pairs; a failure reports the witness pair.
pub fn automorphism_check(a: &AlgebraRef, matrix: Mat) -> Result<AlgAutomorphism> {
    let dim = a.dim();
    assert_eq!(matrix.rows, dim);
    assert_eq!(matrix.cols, dim);
    matrix
        .inverse()
        .map_err(|_| Error::invalid("automorphism candidate is not invertible"))?;
    let phi = AlgAutomorphism { owner: a.clone(), matrix, certified: false };
    for i in 0..dim {
        let pi = phi.apply(&AlgElement::basis(a, i));
        for j in 0..dim {
            let pj = phi.apply(&AlgElement::basis(a, j));
            let lhs = phi.apply(&AlgElement::basis(a, i).mul(&AlgElement::basis(a, j)));
            if lhs != pi.mul(&pj) {
                return Err(Error::invalid(format!(
                    "multiplicativity fails at pair ({}, {})",
                    a.labels[i], a.labels[j]
                )));
            }
        }
    }
    Ok(AlgAutomorphism { certified: true, ..phi })
}

pub fn automorphism_from_images(a: &AlgebraRef, images: &[AlgElement]) -> Result<AlgAutomorphism> {
    let dim = a.dim();
    assert_eq!(images.len(), dim);
    let mut m = Mat::zero(dim, dim, a.conductor);
    for (j, img) in images.iter().enumerate() {
        for i in 0..dim {
            *m.at_mut(i, j) = img.coords[i].clone();
        }
    }
    automorphism_check(a, m)
}

fn signed_perm_matrix(a: &AlgebraRef, map: &[(usize, i64)]) -> Mat {
    let dim = a.dim();
    let mut m = Mat::zero(dim, dim, a.conductor);
    for (j, &(i, sign)) in map.iter().enumerate() {
        *m.at_mut(i, j) = CycScalar::from_int(a.conductor, sign);
    }
    m
}

/// Determines the support permutation of a certified automorphism, checking
/// that each component maps onto a single component, and computes the induced
/// automorphism of the universal group.
pub fn graded_automorphism_check(g: &GradingRef, phi: &AlgAutomorphism) -> Result<SupportPerm> {
    let table = support(g);
    let u = universal_abelian_group(g)?;
    graded_support_perm(g, &table, &u, phi)
}

/// As graded_automorphism_check, but reusing a precomputed support table and
/// universal group (closure loops project many automorphisms of one grading).
pub fn graded_support_perm(
    g: &GradingRef,
    table: &crate::gradings::SupportTable,
    u: &crate::gradings::UniversalResult,
    phi: &AlgAutomorphism,
) -> Result<SupportPerm> {
    if !phi.is_certified() || phi.owner.name != g.algebra.name {
        return Err(Error::invalid("automorphism must be certified on the graded algebra"));
    }
    let m = table.entries.len();
    let mut perm = vec![usize::MAX; m];
    for (s, entry) in table.entries.iter().enumerate() {
        let mut target: Option<usize> = None;
        for &b in &entry.basis {
            let img = phi.apply(&AlgElement::basis(&g.algebra, b));
            for (k, c) in img.coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let t = table
                    .entries
                    .iter()
                    .position(|e| e.basis.contains(&k))
                    .expect("every basis index lies in some component");
                match target {
                    None => target = Some(t),
                    Some(existing) if existing == t => {}
                    Some(_) => {
                        return Err(Error::invalid(format!(
                            "not in Aut(Gamma): component {} is split across components",
                            entry.degree
                        )))
                    }
                }
            }
        }
        let t = target.ok_or_else(|| Error::invalid("component maps to zero"))?;
        if table.entries[t].dim != entry.dim {
            return Err(Error::invalid("support permutation is not dimension-preserving"));
        }
        perm[s] = t;
    }
    let mut seen = vec![false; m];
    for &p in &perm {
        if seen[p] {
            return Err(Error::invalid("support map is not a bijection"));
        }
        seen[p] = true;
    }
    let induced = induced_universal_hom(u, &perm)?;
    Ok(SupportPerm { grading: g.clone(), perm, induced_universal: induced })
}

/// tau on the good-basis Cayley algebra: e_j fixed, u_i -> u_{i+1},
/// v_i -> v_{i+1}.
pub fn tau_cayley() -> Result<AlgAutomorphism> {
    let c = cayley_good_basis()?;
    let map: Vec<(usize, i64)> = TAU_PERM.iter().map(|&i| (i, 1)).collect();
    automorphism_check(&c, signed_perm_matrix(&c, &map))
}

/// phi_1: e_1 <-> e_2, u_i <-> v_i.
pub fn phi1_cayley() -> Result<AlgAutomorphism> {
    let c = cayley_good_basis()?;
    let map = [(1, 1), (0, 1), (5, 1), (6, 1), (7, 1), (2, 1), (3, 1), (4, 1)];
    automorphism_check(&c, signed_perm_matrix(&c, &map))
}

/// phi_2: e_j fixed, u_1 -> -u_1, u_2 <-> u_3, v_1 -> -v_1, v_2 <-> v_3.
pub fn phi2_cayley() -> Result<AlgAutomorphism> {
    let c = cayley_good_basis()?;
    let map = [(0, 1), (1, 1), (2, -1), (4, 1), (3, 1), (5, -1), (7, 1), (6, 1)];
    automorphism_check(&c, signed_perm_matrix(&c, &map))
}

/// psi_(123): E_i -> E_{i+1}, iota_i(x) -> iota_{i+1}(x).
pub fn psi_123(albert: &Albert) -> Result<AlgAutomorphism> {
    let a = &albert.algebra;
    let mut images = Vec::with_capacity(27);
    for i in 1..=3 {
        images.push(albert.e(i + 1));
    }
    // pushed in basis order E1, E2, E3 then the iota blocks
    let mut img = vec![AlgElement::zero(a); 27];
    img[..3].clone_from_slice(&images);
    for i in 1..=3usize {
        for b in 0..8 {
            img[albert_iota_idx(i, b)] =
                AlgElement::basis(a, albert_iota_idx(i + 1, b));
        }
    }
    automorphism_from_images(a, &img)
}

fn psi_transposition(albert: &Albert, fixed: usize) -> Result<AlgAutomorphism> {
    // the automorphism fixing E_fixed, swapping the other two idempotents,
    // conjugating on iota_fixed and swapping the other two iota copies with
    // conjugation
    let a = &albert.algebra;
    let (p, q) = match fixed {
        1 => (2, 3),
        3 => (1, 2),
        _ => return Err(Error::invalid("only psi_(23) and psi_(12) are built in")),
    };
    let mut img = vec![AlgElement::zero(a); 27];
    img[fixed - 1] = albert.e(fixed);
    img[p - 1] = albert.e(q);
    img[q - 1] = albert.e(p);
    for b in 0..8 {
        let xb = AlgElement::basis(&albert.cayley, b);
        let xbar = conjugate(&xb)?;
        img[albert_iota_idx(fixed, b)] = albert.iota(fixed, &xbar);
        img[albert_iota_idx(p, b)] = albert.iota(q, &xbar);
        img[albert_iota_idx(q, b)] = albert.iota(p, &xbar);
    }
    automorphism_from_images(a, &img)
}

/// psi_(23): E_1 fixed, E_2 <-> E_3, iota_1(x) -> iota_1(conj x),
/// iota_2(x) <-> iota_3(conj x).
pub fn psi_23(albert: &Albert) -> Result<AlgAutomorphism> {
    psi_transposition(albert, 1)
}

/// psi_(12): the analogous transposition fixing E_3.
pub fn psi_12(albert: &Albert) -> Result<AlgAutomorphism> {
    psi_transposition(albert, 3)
}

/// Extension of an automorphism of the Cayley algebra to the Albert algebra:
/// fixes the E_i and acts as phi on each iota copy.
pub fn phi_extension_albert(albert: &Albert, phi: &AlgAutomorphism) -> Result<AlgAutomorphism> {
    if !phi.is_certified() || phi.owner.name != albert.cayley.name {
        return Err(Error::invalid("extension requires a certified automorphism of the Cayley factor"));
    }
    let a = &albert.algebra;
    let mut img = vec![AlgElement::zero(a); 27];
    for i in 1..=3usize {
        img[i - 1] = albert.e(i);
        for b in 0..8 {
            img[albert_iota_idx(i, b)] =
                albert.iota(i, &phi.apply(&AlgElement::basis(&albert.cayley, b)));
        }
    }
    automorphism_from_images(a, &img)
}

/// tau extended to the Albert algebra over the good-basis Cayley algebra.
pub fn tau_albert(albert: &Albert) -> Result<AlgAutomorphism> {
    let a = &albert.algebra;
    let mut img = vec![AlgElement::zero(a); 27];
    for i in 1..=3usize {
        img[i - 1] = albert.e(i);
        for b in 0..8 {
            img[albert_iota_idx(i, b)] = AlgElement::basis(a, albert_iota_idx(i, TAU_PERM[b]));
        }
    }
    automorphism_from_images(a, &img)
}

/// psi_0 on the nu-basis: S^+- -> S^-+, nu(a) -> -nu(a), nu_+-(x) -> nu_-+(x),
/// fixing E and E~.
pub fn psi0_zz23(nu: &NuAlbert) -> Result<AlgAutomorphism> {
    let a = &nu.algebra;
    let mut map: Vec<(usize, i64)> = vec![(0, 1), (1, 1), (3, 1), (2, 1)];
    for j in 0..7 {
        map.push((4 + j, -1));
    }
    for j in 0..8 {
        map.push((19 + j, 1));
    }
    for j in 0..8 {
        map.push((11 + j, 1));
    }
    automorphism_check(a, signed_perm_matrix(a, &map))
}

/// Extension of phi in Aut(C) through the nu-basis: fixes E, E~, S^+-,
/// nu(a) -> nu(phi(a)), nu_+-(x) -> nu_+-(phi(x)).
pub fn phi_extension_zz23(nu: &NuAlbert, phi: &AlgAutomorphism) -> Result<AlgAutomorphism> {
    let c = &nu.albert.cayley;
    if !phi.is_certified() || phi.owner.name != c.name {
        return Err(Error::invalid("extension requires a certified automorphism of the Cayley factor"));
    }
    let a = &nu.algebra;
    let mut img = vec![AlgElement::zero(a); 27];
    for i in 0..4 {
        img[i] = AlgElement::basis(a, i);
    }
    let cast = |x: &AlgElement, offset: usize, skip_unit: bool| -> Result<AlgElement> {
        let mut out = AlgElement::zero(a);
        for (k, c) in x.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if skip_unit && k == 0 {
                return Err(Error::invalid("phi does not preserve trace-zero elements"));
            }
            out.coords[offset + k] = c.clone();
        }
        Ok(out)
    };
    for j in 1..8usize {
        let im = phi.apply(&AlgElement::basis(c, j));
        img[3 + j] = cast(&im, 3, true)?;
    }
    for j in 0..8usize {
        let im = phi.apply(&AlgElement::basis(c, j));
        img[11 + j] = cast(&im, 11, false)?;
        img[19 + j] = cast(&im, 19, false)?;
    }
    automorphism_from_images(a, &img)
}

/// The diagonal order-3 automorphisms phi_1, phi_2, phi_3 of the Z_3^3
/// grading: on the eigenbasis, phi_j scales a component of degree d by
/// omega^{d_j}.
pub fn z33_phi(data: &Z33Data, j: usize) -> Result<AlgAutomorphism> {
    if !(1..=3).contains(&j) {
        return Err(Error::invalid("z33_phi index must be 1, 2 or 3"));
    }
    let g = &data.grading;
    let a = &g.algebra;
    let w = CycScalar::root_of_unity(3, 1).embed(a.conductor);
    let mut m = Mat::zero(27, 27, a.conductor);
    for (i, d) in g.degree.iter().enumerate() {
        *m.at_mut(i, i) = w.pow(d.coords[j - 1].rem_euclid(3)).unwrap();
    }
    automorphism_check(a, m)
}

/// Named parameterless constructions (the parameterized families have their
/// own typed entry points).
pub fn builtin_automorphism(name: &str) -> Result<AlgAutomorphism> {
    match name {
        "tau" => tau_cayley(),
        "phi1_cayley" => phi1_cayley(),
        "phi2_cayley" => phi2_cayley(),
        "psi_123" => psi_123(&albert_cartan_grading()?.1),
        "psi_23" => psi_23(&albert_cartan_grading()?.1),
        "psi_12" => psi_12(&albert_cartan_grading()?.1),
        "tau_albert" => tau_albert(&albert_cartan_grading()?.1),
        "psi0_zz23" => psi0_zz23(&albert_zz23_grading()?.1),
        "z33_phi1" => z33_phi(&albert_z33_grading()?, 1),
        "z33_phi2" => z33_phi(&albert_z33_grading()?, 2),
        "z33_phi3" => z33_phi(&albert_z33_grading()?, 3),
        _ => Err(Error::invalid(format!("unknown automorphism name: {}", name))),
    }
}

/// Reflection in a non-isotropic vector: s_v(z) = z - (n(z,v)/n(v)) v.
pub fn reflection(c: &AlgebraRef, v: &AlgElement) -> Result<Mat> {
    let nv = v.norm();
    if nv.is_zero() {
        return Err(Error::invalid("reflection requires n(v) != 0"));
    }
    let inv = nv.inv()?;
    let dim = c.dim();
    let mut m = Mat::zero(dim, dim, c.conductor);
    for j in 0..dim {
        let z = AlgElement::basis(c, j);
        let f = &z.polar(v) * &inv;
        let img = z.sub(&v.scale(&f));
        for i in 0..dim {
            *m.at_mut(i, j) = img.coords[i].clone();
        }
    }
    Ok(m)
}

/// The automorphism psi_c of the Albert algebra attached to c = x.y in
/// Spin(C,n): fixes the E_i, acts by chi_c = s_x s_y on iota_1 and by
/// rho^+_c(z) = (zy) conj(x), rho^-_c(z) = conj(x)(yz) on iota_2, iota_3.
/// If certification fails under s_x s_y the reverse composition is tried;
/// the certification gate is the arbiter of the convention.
pub fn spin_automorphism(albert: &Albert, x: &AlgElement, y: &AlgElement) -> Result<AlgAutomorphism> {
    let c = &albert.cayley;
    let one = CycScalar::one(c.conductor);
    if x.norm() != one || y.norm() != one {
        return Err(Error::invalid("spin_automorphism requires n(x) = n(y) = 1"));
    }
    let sx = reflection(c, x)?;
    let sy = reflection(c, y)?;
    let xbar = conjugate(x)?;
    let build = |chi: &Mat| -> Result<AlgAutomorphism> {
        let a = &albert.algebra;
        let mut img = vec![AlgElement::zero(a); 27];
        for i in 1..=3usize {
            img[i - 1] = albert.e(i);
        }
        for b in 0..8usize {
            let z = AlgElement::basis(c, b);
            let chi_z = AlgElement { algebra: c.clone(), coords: chi.apply(&z.coords) };
            img[albert_iota_idx(1, b)] = albert.iota(1, &chi_z);
            img[albert_iota_idx(2, b)] = albert.iota(2, &z.mul(y).mul(&xbar));
            img[albert_iota_idx(3, b)] = albert.iota(3, &xbar.mul(&y.mul(&z)));
        }
        automorphism_from_images(a, &img)
    };
    build(&sx.mul(&sy))
        .or_else(|_| build(&sy.mul(&sx)))
        .map_err(|_| Error::invalid("spin convention mismatch"))
}

fn single_term(x: &AlgElement) -> Result<(usize, CycScalar)> {
    let terms: Vec<(usize, CycScalar)> = x
        .coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect();
    if terms.len() != 1 {
        return Err(Error::invalid("element is not homogeneous (not a scalar multiple of a basis monomial)"));
    }
    Ok(terms.into_iter().next().unwrap())
}

fn pauli_inverse(p: &PauliAlgebra, d: &AlgElement) -> Result<AlgElement> {
    let (idx, c) = single_term(d)?;
    let t = p.elem_at(idx);
    let tneg = t.neg();
    let sigma = p.sigma(&t, &tneg);
    let factor = (&c * &sigma).inv()?;
    Ok(AlgElement::basis(&p.algebra, p.index_of(&tneg)).scale(&factor))
}

/// The inner automorphism Ad(X_t): X -> X_t X X_t^{-1} of the graded
/// division algebra.
pub fn ad_homogeneous(p: &PauliAlgebra, t: &AbElem) -> Result<AlgAutomorphism> {
    let xt = AlgElement::basis(&p.algebra, p.index_of(t));
    let xt_inv = pauli_inverse(p, &xt)?;
    let dim = p.algebra.dim();
    let images: Vec<AlgElement> = (0..dim)
        .map(|i| xt.mul(&AlgElement::basis(&p.algebra, i)).mul(&xt_inv))
        .collect();
    automorphism_from_images(&p.algebra, &images)
}

/// Monomial automorphism of M(D,k): E_ij tensor d maps to
/// E_{pi(i) pi(j)} tensor d_i psi_0(d) d_j^{-1}.
pub fn monomial_automorphism(
    m: &MatrixAlgebraMDk,
    pi: &[usize],
    d_list: &[AlgElement],
    psi0: &AlgAutomorphism,
) -> Result<AlgAutomorphism> {
    let k = m.k;
    if pi.len() != k || d_list.len() != k {
        return Err(Error::invalid("permutation and d_list must have length k"));
    }
    {
        let mut seen = vec![false; k];
        for &p in pi {
            if p >= k || seen[p] {
                return Err(Error::invalid("pi is not a permutation"));
            }
            seen[p] = true;
        }
    }
    if !psi0.is_certified() || psi0.owner.name != m.pauli.algebra.name {
        return Err(Error::invalid("psi_0 must be certified on the division algebra"));
    }
    let d_inv: Vec<AlgElement> =
        d_list.iter().map(|d| pauli_inverse(&m.pauli, d)).collect::<Result<_>>()?;
    for d in d_list {
        single_term(d)?; // homogeneous invertible
    }
    let dim = m.algebra.dim();
    let order = m.pauli.t.order().unwrap() as usize;
    let mut images = Vec::with_capacity(dim);
    for i in 0..k {
        for j in 0..k {
            for tix in 0..order {
                let x = AlgElement::basis(&m.pauli.algebra, tix);
                let val = d_list[i].mul(&psi0.apply(&x)).mul(&d_inv[j]);
                let mut img = AlgElement::zero(&m.algebra);
                for (pidx, c) in val.coords.iter().enumerate() {
                    if !c.is_zero() {
                        img.coords[(pi[i] * k + pi[j]) * order + pidx] = c.clone();
                    }
                }
                images.push(img);
            }
        }
    }
    automorphism_from_images(&m.algebra, &images)
}

/// Builds psi_0 in Aut(D) inducing a given beta-preserving automorphism mu
/// of the support group T, by rescaling the images of the generators to
/// have the correct multiplicative orders.
pub fn division_aut_from_symplectic(p: &PauliAlgebra, mu: &AbHom) -> Result<AlgAutomorphism> {
    if mu.source != p.t || !mu.is_automorphism() {
        return Err(Error::invalid("mu must be an automorphism of the support group"));
    }
    if !p.beta.preserved_by(mu) {
        return Err(Error::invalid("mu does not preserve the commutation bicharacter"));
    }
    let n = p.algebra.conductor as i64;
    let ngens = p.t.moduli.len();
    let one = AlgElement::one(&p.algebra);
    // rescaled generator images: psi(X_g)^m must equal the scalar X_g^m
    let mut gen_images = Vec::with_capacity(ngens);
    for i in 0..ngens {
        let g = p.t.generator(i);
        let m = p.t.moduli[i];
        let pow_scalar = |x: &AlgElement| -> Result<i64> {
            let mut acc = one.clone();
            for _ in 0..m {
                acc = acc.mul(x);
            }
            let (idx, c) = single_term(&acc)?;
            if idx != 0 {
                return Err(Error::invalid("generator power is not scalar"));
            }
            root_exponent(&c, p.algebra.conductor)
        };
        let xg = AlgElement::basis(&p.algebra, p.index_of(&g));
        let target = AlgElement::basis(&p.algebra, p.index_of(&mu.apply(&g)));
        let e = pow_scalar(&xg)?;
        let e2 = pow_scalar(&target)?;
        let d = (e - e2).rem_euclid(n);
        let exp = solve_congruence(m, d, n)
            .ok_or_else(|| Error::invalid("generator image cannot be rescaled to the correct order"))?;
        gen_images.push(target.scale(&CycScalar::root_of_unity(p.algebra.conductor, exp)));
    }
    // extend multiplicatively along odometer coordinates
    let mut images = Vec::with_capacity(p.algebra.dim());
    for u in p.t.elements() {
        let mut word = one.clone();
        let mut img = one.clone();
        for (i, &c) in u.coords.iter().enumerate() {
            let xg = AlgElement::basis(&p.algebra, p.index_of(&p.t.generator(i)));
            for _ in 0..c {
                word = word.mul(&xg);
                img = img.mul(&gen_images[i]);
            }
        }
        // word = s_u * X_u; define psi(X_u) = img / s_u
        let s_u = word.coords[p.index_of(&u)].clone();
        images.push(img.scale(&s_u.inv()?));
    }
    automorphism_from_images(&p.algebra, &images)
}

fn root_exponent(c: &CycScalar, n: u32) -> Result<i64> {
    for e in 0..n as i64 {
        if *c == CycScalar::root_of_unity(n, e) {
            return Ok(e);
        }
    }
    Err(Error::invalid("scalar is not a root of unity"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoExtension {
    Inconsistent,
    NotGenerating,
    NotAutomorphism(String),
}

impl std::fmt::Display for NoExtension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NoExtension::Inconsistent => write!(f, "inconsistent"),
            NoExtension::NotGenerating => write!(f, "not generating"),
            NoExtension::NotAutomorphism(m) => write!(f, "not an automorphism: {}", m),
        }
    }
}

/// Extends gens -> images to an automorphism by parallel word closure:
/// words are multiplied breadth-first with identical parse trees on both
/// sides; a linear dependence on the left must be matched exactly on the
/// right, and the resulting linear map is certified.
pub fn extend_from_generators(
    a: &AlgebraRef,
    gens: &[AlgElement],
    images: &[AlgElement],
) -> std::result::Result<AlgAutomorphism, NoExtension> {
    assert_eq!(gens.len(), images.len());
    let dim = a.dim();
    let mut span = Span::new(dim, a.conductor);
    let mut pairs: Vec<(AlgElement, AlgElement)> = Vec::new();
    let process = |span: &mut Span,
                       pairs: &mut Vec<(AlgElement, AlgElement)>,
                       w: AlgElement,
                       iw: AlgElement|
     -> std::result::Result<(), NoExtension> {
        match span.insert(&w.coords) {
            Ok(coeffs) => {
                let mut expected = AlgElement::zero(a);
                for (k, c) in coeffs.iter().enumerate() {
                    if !c.is_zero() {
                        expected = expected.add(&pairs[k].1.scale(c));
                    }
                }
                if expected != iw {
                    return Err(NoExtension::Inconsistent);
                }
                Ok(())
            }
            Err(()) => {
                pairs.push((w, iw));
                Ok(())
            }
        }
    };
    if a.unit.is_some() {
        process(&mut span, &mut pairs, AlgElement::one(a), AlgElement::one(a))?;
    }
    for (g, i) in gens.iter().zip(images) {
        process(&mut span, &mut pairs, g.clone(), i.clone())?;
    }
    let mut next = 0;
    while next < pairs.len() && span.rank() < dim {
        for i in 0..=next {
            for (l, r) in [(i, next), (next, i)] {
                let w = pairs[l].0.mul(&pairs[r].0);
                let iw = pairs[l].1.mul(&pairs[r].1);
                process(&mut span, &mut pairs, w, iw)?;
            }
        }
        next += 1;
    }
    if span.rank() < dim {
        return Err(NoExtension::NotGenerating);
    }
    let mut m = Mat::zero(dim, dim, a.conductor);
    for j in 0..dim {
        let mut e = vec![CycScalar::zero(a.conductor); dim];
        e[j] = CycScalar::one(a.conductor);
        let coeffs = span.insert(&e).expect("span is full");
        let mut img = AlgElement::zero(a);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                img = img.add(&pairs[k].1.scale(c));
            }
        }
        for i in 0..dim {
            *m.at_mut(i, j) = img.coords[i].clone();
        }
    }
    automorphism_check(a, m).map_err(|e| NoExtension::NotAutomorphism(e.to_string()))
}

/// Lambda with (x1 x2) x3 = lambda x1 (x2 x3); None when the right side is
/// zero or the two sides are not proportional.
pub fn associativity_defect(
    x1: &AlgElement,
    x2: &AlgElement,
    x3: &AlgElement,
) -> Option<CycScalar> {
    let l = x1.mul(x2).mul(x3);
    let r = x1.mul(&x2.mul(x3));
    let k = r.coords.iter().position(|c| !c.is_zero())?;
    let lambda = &l.coords[k] * &r.coords[k].inv().ok()?;
    if l == r.scale(&lambda) {
        Some(lambda)
    } else {
        None
    }
}

/// Extends mu in Aut(Z_2^3) to an automorphism of the Cayley-Dickson graded
/// Cayley algebra by sending each doubling generator to a square-1
/// homogeneous element of the image component.
pub fn octonion_aut_from_group_aut(
    g: &Grading,
    mu: &AbHom,
) -> std::result::Result<AlgAutomorphism, NoExtension> {
    assert_eq!(mu.source, g.group);
    let a = &g.algebra;
    let table = support(g);
    let imag = CycScalar::root_of_unity(4, 1).embed(a.conductor);
    let one = AlgElement::one(a);
    let mut gens = Vec::new();
    let mut images = Vec::new();
    for i in 0..3 {
        let c_i = g.group.generator(i);
        // doubling generators sit at basis indices 1, 2, 4
        gens.push(AlgElement::basis(a, 1 << i));
        let entry = table
            .entries
            .iter()
            .find(|e| e.degree == mu.apply(&c_i))
            .expect("support is all of Z_2^3");
        let mut w = AlgElement::basis(a, entry.basis[0]);
        if w.mul(&w) == one.neg() {
            w = w.scale(&imag);
        }
        images.push(w);
    }
    extend_from_generators(a, &gens, &images)
}

/// Attempts to realize mu in Aut(Z_3^3) as an automorphism of the Albert
/// algebra respecting the Z_3^3 grading: the generators X_j (of degrees
/// g_1, g_2, g_3) are sent to the cube-normalized basis elements of degrees
/// mu(g_j), and the extension is attempted. Ok(None) means NotRealizable.
pub fn realize_z33(data: &Z33Data, mu: &AbHom) -> Result<Option<AlgAutomorphism>> {
    let g = &data.grading;
    if mu.source != g.group || !mu.is_automorphism() {
        return Err(Error::invalid("mu must be an automorphism of Z_3^3"));
    }
    let table = support(g);
    let gen_indices = [3usize, 9, 1]; // W(e1,0), W(u1,0), F1
    let mut gens = Vec::new();
    let mut images = Vec::new();
    for (j, &gi) in gen_indices.iter().enumerate() {
        let deg = &g.degree[gi];
        assert_eq!(deg, &g.group.generator(j));
        gens.push(AlgElement::basis(&g.algebra, gi));
        let entry = table
            .entries
            .iter()
            .find(|e| e.degree == mu.apply(deg))
            .expect("support is all of Z_3^3");
        images.push(AlgElement::basis(&g.algebra, entry.basis[0]));
    }
    match extend_from_generators(&g.algebra, &gens, &images) {
        Ok(phi) => Ok(Some(phi)),
        Err(NoExtension::Inconsistent) | Err(NoExtension::NotAutomorphism(_)) => Ok(None),
        Err(NoExtension::NotGenerating) => Err(Error::invalid(
            "homogeneous elements of independent degrees failed to generate",
        )),
    }
}

/// Conjugates an automorphism through a change of basis (old = b * new) and
/// re-certifies it on the re-based algebra.
pub fn transport(phi: &AlgAutomorphism, b: &Mat, new_owner: &AlgebraRef) -> Result<AlgAutomorphism> {
    let binv = b.inverse()?;
    automorphism_check(new_owner, binv.mul(&phi.matrix).mul(b))
}

pub fn half_rational(n: u32) -> CycScalar {
    CycScalar::from_rational(n, BigRational::new(BigInt::one(), BigInt::from(2)))
}
