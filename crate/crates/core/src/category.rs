//! The two concrete monoidal categories (`R`-bimodules and `H`-modules) with
//! unbracketed tensor products, whiskering, unitors and inner homs.
//!
//! An `n`-fold tensor is presented as a quotient of the `n`-fold tensor over
//! the ground field (left-major basis). All bracketings are identified with
//! this flat presentation; [`Cat::assoc_expand`] translates between a factor
//! that is itself a tensor object and its flattened factors.
//!
//! A [`Cat`] may be *reversed*: the same category with the opposite tensor
//! product. In reversed mode factor lists are read backwards and left/right
//! inner homs are exchanged, so right-handed constructions are obtained from
//! left-handed code.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::algebra::Algebra;
use crate::bialgebroid::Bialgebroid;
use crate::field::Field;
use crate::linalg::{solve, LinAlgError, Subspace};
use crate::mat::Mat;
use crate::module::{Module, Obj};

#[derive(Clone, Debug)]
pub enum Kind {
    Bimodules(Arc<Algebra>),
    HModules(Arc<Bialgebroid>),
}

/// Flat presentation of a tensor product in base (unreversed) order.
#[derive(Debug)]
pub struct Tensor {
    pub factors: Vec<Obj>,
    pub obj: Obj,
    /// ground tensor → quotient
    pub proj: Mat,
    /// quotient → ground tensor, a right inverse of `proj`
    pub sec: Mat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Side {
    Left,
    Right,
}

/// Inner hom `[x, y]` with its evaluation morphism.
#[derive(Debug)]
pub struct InnerHom {
    pub source: Obj,
    pub target: Obj,
    pub obj: Obj,
    /// Carrier as a subspace of row-major vectorized linear maps out of
    /// `domain_dim`-dimensional space into `target`.
    pub carrier: Subspace,
    pub domain_dim: usize,
    /// `x ⊗ [x,y] → y` (left) or `[x,y] ⊗ x → y` (right), on the tensor
    /// object in oriented order.
    pub eval: Mat,
}

impl InnerHom {
    /// The linear map represented by carrier coordinate vector `v`.
    pub fn as_map(&self, v: &Mat) -> Mat {
        self.carrier.basis.mul(v).unvectorize(self.target.dim(), self.domain_dim)
    }
}

struct Shared {
    kind: Kind,
    field: Field,
    unit: Obj,
    regular: Option<Obj>,
    tensors: Mutex<HashMap<Vec<u64>, Arc<Tensor>>>,
    homs: Mutex<HashMap<(u64, u64, Side), Arc<InnerHom>>>,
}

#[derive(Clone)]
pub struct Cat {
    shared: Arc<Shared>,
    reversed: bool,
}

impl std::fmt::Debug for Cat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Cat").field("kind", &self.shared.kind).field("reversed", &self.reversed).finish()
    }
}

fn dims(list: &[Obj]) -> usize {
    list.iter().map(|o| o.dim()).product()
}

impl Cat {
    pub fn bimodules(base: Arc<Algebra>) -> Cat {
        let unit = Module::regular_bimodule(&base);
        Cat::with(Kind::Bimodules(base.clone()), base.field(), unit, None)
    }

    pub fn h_modules(b: Arc<Bialgebroid>) -> Cat {
        let unit = b.unit_module();
        let regular = b.regular_module();
        Cat::with(Kind::HModules(b.clone()), b.field(), unit, Some(regular))
    }

    fn with(kind: Kind, field: Field, unit: Obj, regular: Option<Obj>) -> Cat {
        Cat {
            shared: Arc::new(Shared {
                kind,
                field,
                unit,
                regular,
                tensors: Mutex::new(HashMap::new()),
                homs: Mutex::new(HashMap::new()),
            }),
            reversed: false,
        }
    }

    /// Same category with the opposite tensor product.
    pub fn rev(&self) -> Cat {
        Cat { shared: self.shared.clone(), reversed: !self.reversed }
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    pub fn kind(&self) -> &Kind {
        &self.shared.kind
    }

    pub fn field(&self) -> Field {
        self.shared.field
    }

    pub fn base(&self) -> &Algebra {
        match &self.shared.kind {
            Kind::Bimodules(r) => r,
            Kind::HModules(b) => &b.base,
        }
    }

    pub fn bialgebroid(&self) -> Option<&Arc<Bialgebroid>> {
        match &self.shared.kind {
            Kind::HModules(b) => Some(b),
            Kind::Bimodules(_) => None,
        }
    }

    pub fn unit(&self) -> Obj {
        self.shared.unit.clone()
    }

    /// The regular module `H` (only for `H`-modules).
    pub fn regular(&self) -> Option<Obj> {
        self.shared.regular.clone()
    }

    pub fn identity(&self, x: &Module) -> Mat {
        Mat::identity(self.field(), x.dim())
    }

    fn orient(&self, list: &[Obj]) -> Vec<Obj> {
        let mut v = list.to_vec();
        if self.reversed {
            v.reverse();
        }
        v
    }

    // ---- tensors ----------------------------------------------------------

    /// Tensor product of `list` (oriented order). The returned presentation is
    /// in base order.
    pub fn tensor(&self, list: &[Obj]) -> Arc<Tensor> {
        self.base_tensor(&self.orient(list))
    }

    pub fn tensor_obj(&self, list: &[Obj]) -> Obj {
        self.tensor(list).obj.clone()
    }

    fn base_tensor(&self, list: &[Obj]) -> Arc<Tensor> {
        assert!(!list.is_empty(), "empty tensor product");
        let key: Vec<u64> = list.iter().map(|o| o.id()).collect();
        if let Some(t) = self.shared.tensors.lock().expect("cache poisoned").get(&key) {
            return t.clone();
        }
        let f = self.field();
        let t = if list.len() == 1 {
            let n = list[0].dim();
            Tensor { factors: list.to_vec(), obj: list[0].clone(), proj: Mat::identity(f, n), sec: Mat::identity(f, n) }
        } else {
            let head = self.base_tensor(&list[..list.len() - 1]);
            let last = &list[list.len() - 1];
            let (obj, q) = match &self.shared.kind {
                Kind::Bimodules(r) => {
                    let (q, left, right) = crate::bimodule::binary_tensor(r, &head.obj, last);
                    let label = format!("{}⊗{}", head.obj.label(), last.label());
                    (Module::bimodule(label, f, q.dim(), left, right), q)
                }
                Kind::HModules(b) => b.module_tensor(&head.obj, last).expect("diagonal action must descend"),
            };
            let id_last = Mat::identity(f, last.dim());
            let proj = q.projection.mul(&head.proj.kron(&id_last));
            let sec = head.sec.kron(&id_last).mul(&q.section);
            Tensor { factors: list.to_vec(), obj, proj, sec }
        };
        let t = Arc::new(t);
        self.shared.tensors.lock().expect("cache poisoned").insert(key, t.clone());
        t
    }

    /// `id ⊗ f ⊗ id`: applies `f: ⊗src[at..at+len] → ⊗out` inside
    /// `⊗src`, landing in `⊗(src[..at] ++ out ++ src[at+len..])`.
    pub fn whisker(&self, src: &[Obj], at: usize, len: usize, f: &Mat, out: &[Obj]) -> Mat {
        let n = src.len();
        assert!(at + len <= n && len > 0);
        let (bsrc, bat, bout) = if self.reversed {
            let mut s = src.to_vec();
            s.reverse();
            let mut o = out.to_vec();
            o.reverse();
            (s, n - at - len, o)
        } else {
            (src.to_vec(), at, out.to_vec())
        };
        let s = self.base_tensor(&bsrc);
        let b = self.base_tensor(&bsrc[bat..bat + len]);
        let o = self.base_tensor(&bout);
        let mut dst = bsrc[..bat].to_vec();
        dst.extend(bout.iter().cloned());
        dst.extend(bsrc[bat + len..].iter().cloned());
        let d = self.base_tensor(&dst);
        let lift = o.sec.mul(f).mul(&b.proj);
        let big = lift.embed(dims(&bsrc[..bat]), dims(&bsrc[bat + len..]));
        d.proj.mul(&big.mul(&s.sec))
    }

    /// `f ⊗ g` for `f: ⊗a → ⊗a'`, `g: ⊗b → ⊗b'`.
    pub fn tensor_maps(&self, a: &[Obj], f: &Mat, a2: &[Obj], b: &[Obj], g: &Mat, b2: &[Obj]) -> Mat {
        let mut src = a.to_vec();
        src.extend(b.iter().cloned());
        let first = self.whisker(&src, 0, a.len(), f, a2);
        let mut mid = a2.to_vec();
        mid.extend(b.iter().cloned());
        self.whisker(&mid, a2.len(), b.len(), g, b2).mul(&first)
    }

    /// `⊗list → ⊗(list with I inserted at pos)`.
    pub fn insert_unit(&self, list: &[Obj], pos: usize) -> Mat {
        let n = list.len();
        assert!(pos <= n);
        let bl = self.orient(list);
        let bp = if self.reversed { n - pos } else { pos };
        let mut dst = bl[..bp].to_vec();
        dst.push(self.unit());
        dst.extend(bl[bp..].iter().cloned());
        let s = self.base_tensor(&bl);
        let d = self.base_tensor(&dst);
        let u = self.base().unit().embed(dims(&bl[..bp]), dims(&bl[bp..]));
        d.proj.mul(&u.mul(&s.sec))
    }

    /// `⊗list → ⊗(list without the unit factor at pos)`.
    pub fn remove_unit(&self, list: &[Obj], pos: usize) -> Mat {
        let n = list.len();
        assert!(n >= 2 && pos < n);
        let f = self.field();
        let bl = self.orient(list);
        let bp = if self.reversed { n - 1 - pos } else { pos };
        let r = self.base().dim();
        let mut dst = bl.clone();
        dst.remove(bp);
        let (contract, pre, post) = if bp > 0 {
            // x ⊗ a ↦ x·a
            let x = &bl[bp - 1];
            let k = Mat::from_triples(
                f,
                x.dim(),
                x.dim() * r,
                (0..r).flat_map(|a| x.right(a).entries().map(move |(row, i, v)| (row, i * r + a, v.clone())).collect::<Vec<_>>()),
            );
            (k, dims(&bl[..bp - 1]), dims(&bl[bp + 1..]))
        } else {
            // a ⊗ y ↦ a·y
            let y = &bl[1];
            let k = Mat::from_triples(
                f,
                y.dim(),
                r * y.dim(),
                (0..r).flat_map(|a| y.left(a).entries().map(move |(row, j, v)| (row, a * y.dim() + j, v.clone())).collect::<Vec<_>>()),
            );
            (k, 1, dims(&bl[2..]))
        };
        let s = self.base_tensor(&bl);
        let d = self.base_tensor(&dst);
        d.proj.mul(&contract.embed(pre, post).mul(&s.sec))
    }

    /// `I ⊗ x → x`.
    pub fn left_unitor(&self, x: &Obj) -> Mat {
        self.remove_unit(&[self.unit(), x.clone()], 0)
    }

    /// `x ⊗ I → x`.
    pub fn right_unitor(&self, x: &Obj) -> Mat {
        self.remove_unit(&[x.clone(), self.unit()], 1)
    }

    /// Identifies `⊗list`, whose factor at `pos` is `⊗inner`, with the flat
    /// tensor product where that factor is replaced by `inner`.
    pub fn assoc_expand(&self, list: &[Obj], pos: usize, inner: &[Obj]) -> Mat {
        let (s, d, t_in, pre, post) = self.assoc_parts(list, pos, inner);
        d.proj.mul(&t_in.sec.embed(pre, post).mul(&s.sec))
    }

    /// Inverse of [`Cat::assoc_expand`].
    pub fn assoc_collapse(&self, list: &[Obj], pos: usize, inner: &[Obj]) -> Mat {
        let (s, d, t_in, pre, post) = self.assoc_parts(list, pos, inner);
        s.proj.mul(&t_in.proj.embed(pre, post).mul(&d.sec))
    }

    fn assoc_parts(&self, list: &[Obj], pos: usize, inner: &[Obj]) -> (Arc<Tensor>, Arc<Tensor>, Arc<Tensor>, usize, usize) {
        let n = list.len();
        let bl = self.orient(list);
        let bp = if self.reversed { n - 1 - pos } else { pos };
        let t_in = self.tensor(inner);
        assert_eq!(t_in.obj.id(), bl[bp].id(), "factor is not the given tensor product");
        let mut dst = bl[..bp].to_vec();
        dst.extend(t_in.factors.iter().cloned());
        dst.extend(bl[bp + 1..].iter().cloned());
        let (pre, post) = (dims(&bl[..bp]), dims(&bl[bp + 1..]));
        (self.base_tensor(&bl), self.base_tensor(&dst), t_in, pre, post)
    }

    /// Ground-field pairing `a ⊗_k (⊗z) → a ⊗ (⊗z)`, inputs indexed
    /// `i·dim(⊗z) + j` regardless of orientation.
    pub fn pair_map(&self, a: &Obj, z: &[Obj]) -> Mat {
        let mut list = vec![a.clone()];
        list.extend(z.iter().cloned());
        let d = self.tensor(&list);
        let zt = self.tensor(z);
        let f = self.field();
        if self.reversed {
            let (da, dz) = (a.dim(), zt.obj.dim());
            let swap = Mat::from_triples(f, dz * da, da * dz, (0..da).flat_map(|i| (0..dz).map(move |j| (j * da + i, i * dz + j, f.one()))));
            d.proj.mul(&zt.sec.kron(&Mat::identity(f, da))).mul(&swap)
        } else {
            d.proj.mul(&Mat::identity(f, a.dim()).kron(&zt.sec))
        }
    }

    // ---- morphisms --------------------------------------------------------

    /// Structure operators that morphisms must intertwine.
    fn ops<'a>(&self, x: &'a Module) -> Vec<&'a Mat> {
        match &self.shared.kind {
            Kind::Bimodules(_) => x.lefts().iter().chain(x.rights()).collect(),
            Kind::HModules(_) => x.actions().expect("H-module").iter().collect(),
        }
    }

    pub fn is_morphism(&self, f: &Mat, src: &Module, dst: &Module) -> bool {
        f.shape() == (dst.dim(), src.dim())
            && self.ops(src).iter().zip(self.ops(dst)).all(|(a, b)| f.mul(a) == b.mul(f))
    }

    /// All morphisms `src → dst`, as row-major vectorized matrices.
    pub fn hom_space(&self, src: &Module, dst: &Module) -> Subspace {
        let f = self.field();
        let (is, id) = (Mat::identity(f, src.dim()), Mat::identity(f, dst.dim()));
        let rows: Vec<Mat> =
            self.ops(src).iter().zip(self.ops(dst)).map(|(a, b)| b.kron(&is).sub(&id.kron(&a.transpose()))).collect();
        if rows.is_empty() {
            return Subspace::span(&Mat::identity(f, src.dim() * dst.dim()));
        }
        Subspace::kernel_of(&Mat::vstack(&rows.iter().collect::<Vec<_>>()))
    }

    // ---- inner homs -------------------------------------------------------

    /// `[x, y]` with `eval: x ⊗ [x,y] → y`.
    pub fn hom_left(&self, x: &Obj, y: &Obj) -> Arc<InnerHom> {
        self.base_hom(x, y, if self.reversed { Side::Right } else { Side::Left })
    }

    /// `[x, y]` with `eval: [x,y] ⊗ x → y`.
    pub fn hom_right(&self, x: &Obj, y: &Obj) -> Arc<InnerHom> {
        self.base_hom(x, y, if self.reversed { Side::Left } else { Side::Right })
    }

    fn base_hom(&self, x: &Obj, y: &Obj, side: Side) -> Arc<InnerHom> {
        let key = (x.id(), y.id(), side);
        if let Some(h) = self.shared.homs.lock().expect("cache poisoned").get(&key) {
            return h.clone();
        }
        let h = Arc::new(match &self.shared.kind {
            Kind::Bimodules(_) => self.bimodule_hom(x, y, side),
            Kind::HModules(b) => self.module_hom(b, x, y, side),
        });
        self.shared.homs.lock().expect("cache poisoned").insert(key, h.clone());
        h
    }

    fn bimodule_hom(&self, x: &Obj, y: &Obj, side: Side) -> InnerHom {
        let f = self.field();
        let (dx, dy) = (x.dim(), y.dim());
        let (ix, iy) = (Mat::identity(f, dx), Mat::identity(f, dy));
        let r = self.base().dim();
        let (cons, lefts, rights): (Vec<Mat>, Vec<Mat>, Vec<Mat>) = match side {
            // left-linear maps: (a·φ)(x) = φ(x·a), (φ·b)(x) = φ(x)·b
            Side::Left => (
                (0..r).map(|a| y.left(a).kron(&ix).sub(&iy.kron(&x.left(a).transpose()))).collect(),
                (0..r).map(|a| iy.kron(&x.right(a).transpose())).collect(),
                (0..r).map(|b| y.right(b).kron(&ix)).collect(),
            ),
            // right-linear maps: (a·φ)(x) = a·φ(x), (φ·b)(x) = φ(b·x)
            Side::Right => (
                (0..r).map(|a| y.right(a).kron(&ix).sub(&iy.kron(&x.right(a).transpose()))).collect(),
                (0..r).map(|a| y.left(a).kron(&ix)).collect(),
                (0..r).map(|b| iy.kron(&x.left(b).transpose())).collect(),
            ),
        };
        let carrier = Subspace::kernel_of(&Mat::vstack(&cons.iter().collect::<Vec<_>>()));
        let m = carrier.dim();
        let label = format!("[{},{}]", x.label(), y.label());
        let obj = Module::bimodule(
            label,
            f,
            m,
            lefts.iter().map(|op| carrier.restrict(op)).collect(),
            rights.iter().map(|op| carrier.restrict(op)).collect(),
        );
        // evaluation on the ground tensor, then on the quotient
        let basis = &carrier.basis;
        let eval_k = match side {
            Side::Left => Mat::from_triples(f, dy, dx * m, basis.entries().map(|(row, j, v)| (row / dx, (row % dx) * m + j, v.clone()))),
            Side::Right => Mat::from_triples(f, dy, m * dx, basis.entries().map(|(row, j, v)| (row / dx, j * dx + row % dx, v.clone()))),
        };
        let t = match side {
            Side::Left => self.base_tensor(&[x.clone(), obj.clone()]),
            Side::Right => self.base_tensor(&[obj.clone(), x.clone()]),
        };
        InnerHom { source: x.clone(), target: y.clone(), obj, carrier, domain_dim: dx, eval: eval_k.mul(&t.sec) }
    }

    fn module_hom(&self, b: &Bialgebroid, x: &Obj, y: &Obj, side: Side) -> InnerHom {
        let f = self.field();
        let hreg = self.regular().expect("H-modules");
        let h = b.dim();
        let pair = match side {
            Side::Left => vec![x.clone(), hreg.clone()],
            Side::Right => vec![hreg.clone(), x.clone()],
        };
        let t = self.base_tensor(&pair);
        let dm = t.obj.dim();
        let carrier = self.hom_space(&t.obj, y);
        let m = carrier.dim();
        let iy = Mat::identity(f, y.dim());
        let base_cat = Cat { shared: self.shared.clone(), reversed: false };
        // (g·φ) = φ ∘ (x ⊗ ρ_g) resp. φ ∘ (ρ_g ⊗ x)
        let action: Vec<Mat> = (0..h)
            .map(|g| {
                let rho = b.total.right_mul(g);
                let w = match side {
                    Side::Left => base_cat.whisker(&pair, 1, 1, &rho, std::slice::from_ref(&hreg)),
                    Side::Right => base_cat.whisker(&pair, 0, 1, &rho, std::slice::from_ref(&hreg)),
                };
                carrier.restrict(&iy.kron(&w.transpose()))
            })
            .collect();
        let label = format!("[{},{}]", x.label(), y.label());
        let obj = b.h_module(label, action);
        // u_i = π(x_i ⊗ 1) resp. π(1 ⊗ x_i)
        let ix = Mat::identity(f, x.dim());
        let u = match side {
            Side::Left => t.proj.mul(&ix.kron(b.total.unit())),
            Side::Right => t.proj.mul(&b.total.unit().kron(&ix)),
        };
        let dx = x.dim();
        let ev_pair = match side {
            Side::Left => self.base_tensor(&[x.clone(), obj.clone()]),
            Side::Right => self.base_tensor(&[obj.clone(), x.clone()]),
        };
        let mut triples = Vec::new();
        for j in 0..m {
            let phi = carrier.basis.column(j).unvectorize(y.dim(), dm);
            let img = phi.mul(&u);
            for (row, i, v) in img.entries() {
                let col = match side {
                    Side::Left => i * m + j,
                    Side::Right => j * dx + i,
                };
                triples.push((row, col, v.clone()));
            }
        }
        let eval_k = Mat::from_triples(f, y.dim(), dx * m, triples);
        InnerHom { source: x.clone(), target: y.clone(), obj, carrier, domain_dim: dm, eval: eval_k.mul(&ev_pair.sec) }
    }

    /// Transposes `f: x ⊗ (⊗z) → y` to `⊗z → [x, y]` (left inner hom).
    pub fn adjunct_left(&self, x: &Obj, z: &[Obj], y: &Obj, f: &Mat) -> Mat {
        let zobj = self.tensor_obj(z);
        let mut list = vec![x.clone()];
        list.extend(z.iter().cloned());
        let f1 = f.mul(&self.assoc_expand(&[x.clone(), zobj.clone()], 1, z));
        let side = if self.reversed { Side::Right } else { Side::Left };
        self.base_adjunct(side, x, &zobj, y, &f1)
    }

    /// Transposes `f: (⊗z) ⊗ x → y` to `⊗z → [x, y]` (right inner hom).
    pub fn adjunct_right(&self, x: &Obj, z: &[Obj], y: &Obj, f: &Mat) -> Mat {
        let zobj = self.tensor_obj(z);
        let f1 = f.mul(&self.assoc_expand(&[zobj.clone(), x.clone()], 0, z));
        let side = if self.reversed { Side::Left } else { Side::Right };
        self.base_adjunct(side, x, &zobj, y, &f1)
    }

    /// `f` is given on the base-order binary tensor of `x` and `z`.
    fn base_adjunct(&self, side: Side, x: &Obj, z: &Obj, y: &Obj, f: &Mat) -> Mat {
        let fld = self.field();
        let hom = self.base_hom(x, y, side);
        let ix = Mat::identity(fld, x.dim());
        let pz = match side {
            Side::Left => self.base_tensor(&[x.clone(), z.clone()]),
            Side::Right => self.base_tensor(&[z.clone(), x.clone()]),
        };
        let fp = f.mul(&pz.proj);
        let mut cols = Vec::with_capacity(z.dim());
        for j in 0..z.dim() {
            // c_j: the elements e_j (bimodules) or g·e_j (H-modules)
            let c = match &self.shared.kind {
                Kind::Bimodules(_) => Mat::unit_vector(fld, z.dim(), j),
                Kind::HModules(b) => {
                    let h = b.dim();
                    Mat::from_triples(
                        fld,
                        z.dim(),
                        h,
                        (0..h).flat_map(|g| z.action(g).column(j).entries().map(move |(r, _, v)| (r, g, v.clone())).collect::<Vec<_>>()),
                    )
                }
            };
            let lifted = match side {
                Side::Left => fp.mul(&ix.kron(&c)),
                Side::Right => fp.mul(&c.kron(&ix)),
            };
            let phi = match &self.shared.kind {
                Kind::Bimodules(_) => lifted,
                Kind::HModules(_) => {
                    let hreg = self.regular().expect("H-modules");
                    let t = match side {
                        Side::Left => self.base_tensor(&[x.clone(), hreg]),
                        Side::Right => self.base_tensor(&[hreg, x.clone()]),
                    };
                    lifted.mul(&t.sec)
                }
            };
            cols.push(hom.carrier.coords.mul(&phi.vectorize()));
        }
        if cols.is_empty() {
            return Mat::zeros(fld, hom.obj.dim(), 0);
        }
        Mat::hstack(&cols.iter().collect::<Vec<_>>())
    }

    /// Coevaluation `y → [x, x ⊗ y]`.
    pub fn hcoev(&self, x: &Obj, y: &Obj) -> Mat {
        let xy = self.tensor_obj(&[x.clone(), y.clone()]);
        self.adjunct_left(x, std::slice::from_ref(y), &xy, &self.identity(&xy))
    }
}

/// Solves `e ∘ (a ⊗ ψ) = g` for `ψ: ⊗z → ⊗zp`, where `e: a ⊗ (⊗zp) → T`
/// and `g: a ⊗ (⊗z) → T`. Returns the unique solution, or an error if none
/// exists or it is not unique.
pub fn solve_right_factor(cat: &Cat, a: &Obj, z: &[Obj], zp: &[Obj], e: &Mat, g: &Mat) -> Result<Mat, FactorError> {
    let da = a.dim();
    let theta = e.mul(&cat.pair_map(a, zp)).fold_columns(da);
    let rhs = g.mul(&cat.pair_map(a, z)).fold_columns(da);
    match solve(&theta, &rhs) {
        Ok(sol) if sol.is_unique() => Ok(sol.particular),
        Ok(sol) => Err(FactorError::NotUnique { kernel_dim: sol.kernel.ncols() }),
        Err(LinAlgError::NoSolution { column }) => Err(FactorError::NoSolution { column }),
        Err(e) => Err(FactorError::Other(e.to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error("no solution (right-hand column {column})")]
    NoSolution { column: usize },
    #[error("solution not unique (kernel dimension {kernel_dim})")]
    NotUnique { kernel_dim: usize },
    #[error("{0}")]
    Other(String),
}
