use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{quotient_data, Matrix, RowSpace};
use crate::field::Field;
use crate::homolog::{lift_chain_map, min_proj_resolution, ProjResolution};
use crate::preproj::module::check_gldim;
use crate::quivalg::{Algebra, FinDimAlgebra};
use crate::repmod::{ModuleMap, ProjMap, Representation};

/// `E = Ext^n(DΛ, Λ)` with its two actions. Every basis element lies in
/// some `e_u E e_w`; actions are given for arrows, as matrices whose
/// `k`-th column is the image of the `k`-th basis element.
#[derive(Clone, Debug)]
pub struct ExtBimodule<F: Field> {
    pub dim: usize,
    pub left_vertex: Vec<usize>,
    pub right_vertex: Vec<usize>,
    pub left_action: Vec<Matrix<F>>,
    pub right_action: Vec<Matrix<F>>,
}

impl<F: Field> ExtBimodule<F> {
    /// `(a·x)·b = a·(x·b)` for all arrows `a`, `b`.
    pub fn actions_commute(&self) -> bool {
        self.left_action.iter().all(|l| self.right_action.iter().all(|r| l.mul(r) == r.mul(l)))
    }

    /// Dimension vector of `E` as a right module.
    pub fn right_dims(&self, vertices: usize) -> Vec<usize> {
        let mut d = vec![0; vertices];
        for &w in &self.right_vertex {
            d[w] += 1;
        }
        d
    }
}

/// Cochain coordinates of `Hom(P_n, Λ) = ⊕_g A e_{v_g}`: pairs `(g, path)`.
struct Cochains {
    coords: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl Cochains {
    fn new<F: Field>(a: &Algebra<F>, gens: &[usize]) -> Self {
        let mut coords = Vec::new();
        for (g, &v) in gens.iter().enumerate() {
            for p in a.paths_to(v) {
                coords.push((g, p));
            }
        }
        let index = coords.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        Cochains { coords, index }
    }

    fn len(&self) -> usize {
        self.coords.len()
    }
}

/// Matrix of `(y_h) ↦ (Σ_h y_h · x_{hg})_g` from cochains on the target of `pm`
/// to cochains on its source.
fn pullback<F: Field>(a: &Algebra<F>, pm: &ProjMap<F>, tgt: &Cochains, src: &Cochains) -> Matrix<F> {
    let f = a.field();
    let mut m = Matrix::zeros(f, src.len(), tgt.len());
    for (col, &(h, p)) in tgt.coords.iter().enumerate() {
        for g in 0..pm.source.len() {
            let x = &pm.entries[h][g];
            for (i, c) in x.iter().enumerate() {
                if f.is_zero(c) {
                    continue;
                }
                for (k, d) in a.mult_basis(p, i) {
                    let row = src.index[&(g, *k)];
                    let cur = f.add(m.get(row, col), &f.mul(c, d));
                    m.set(row, col, cur);
                }
            }
        }
    }
    m
}

/// One summand `Ext^n(I_w, Λ)` with its cochain data.
struct ExtPiece<F: Field> {
    res: ProjResolution<F>,
    cochains: Cochains,
    /// Per left vertex `u`: representatives (as cochains) and a solver for
    /// coordinates modulo coboundaries.
    reps: Vec<Vec<Vec<F::Elem>>>,
    bounds: Vec<Matrix<F>>,
    coord_offset: Vec<usize>,
}

fn sub_vector<F: Field>(v: &[F::Elem], idx: &[usize]) -> Vec<F::Elem> {
    idx.iter().map(|&i| v[i].clone()).collect()
}

impl<F: Field> ExtPiece<F> {
    fn coordinates(&self, a: &Algebra<F>, z: &[F::Elem]) -> Vec<(usize, F::Elem)> {
        let f = a.field();
        let mut out = Vec::new();
        for (u, reps) in self.reps.iter().enumerate() {
            if reps.is_empty() {
                continue;
            }
            let idx: Vec<usize> = (0..self.cochains.len()).filter(|&k| a.basis()[self.cochains.coords[k].1].start == u).collect();
            let zu = sub_vector::<F>(z, &idx);
            let cols: Vec<Vec<F::Elem>> = reps.iter().map(|r| sub_vector::<F>(r, &idx)).collect();
            let m = Matrix::from_columns(f, idx.len(), &cols).hstack(&self.bounds[u]);
            let x = m.solve_vec(&zu).expect("element is a cocycle");
            for (k, c) in x.into_iter().take(reps.len()).enumerate() {
                if !f.is_zero(&c) {
                    out.push((self.coord_offset[u] + k, c));
                }
            }
        }
        out
    }
}

/// The map `I_{w'} -> I_w`, `ψ ↦ b·ψ`, for an arrow `b: w -> w'`.
fn left_mult_on_injectives<F: Field>(a: &Algebra<F>, b: usize, src: &Representation<F>, tgt: &Representation<F>) -> ModuleMap<F> {
    let f = a.field();
    let op = a.opposite();
    let arr = a.quiver().arrow(b);
    let bi = a.arrow_basis_index(b);
    let blocks = (0..a.num_vertices())
        .map(|x| {
            let qs = op.block(arr.source, x);
            let ps = op.block(arr.target, x);
            let mut m = Matrix::zeros(f, qs.len(), ps.len());
            for (r, &q) in qs.iter().enumerate() {
                for (k, c) in a.mult_basis(q, bi) {
                    if let Some(col) = ps.iter().position(|p| p == k) {
                        m.set(r, col, c.clone());
                    }
                }
            }
            m
        })
        .collect();
    let map = ModuleMap { source: src.clone(), target: tgt.clone(), blocks };
    debug_assert!(map.is_homomorphism());
    map
}

pub fn ext_bimodule<F: Field>(a: &Algebra<F>, n: usize) -> Result<ExtBimodule<F>> {
    assert!(n >= 1, "n must be positive");
    check_gldim(a, n)?;
    let f = a.field();
    let nv = a.num_vertices();
    let injectives: Vec<Representation<F>> = (0..nv).map(|w| Representation::injective(a, w)).collect();
    let mut pieces: Vec<ExtPiece<F>> = Vec::new();
    let mut left_vertex = Vec::new();
    let mut right_vertex = Vec::new();
    let mut reps_all: Vec<(usize, Vec<F::Elem>)> = Vec::new();
    for (w, inj) in injectives.iter().enumerate() {
        let res = min_proj_resolution(inj, n + 1);
        let gens = res.vertices.get(n).cloned().unwrap_or_default();
        let cochains = Cochains::new(a, &gens);
        let prev = Cochains::new(a, res.vertices.get(n.wrapping_sub(1)).map(Vec::as_slice).unwrap_or(&[]));
        let delta = if res.differentials.len() > n {
            let next = Cochains::new(a, &res.vertices[n + 1]);
            Some(pullback(a, &res.proj_map(n), &cochains, &next))
        } else {
            None
        };
        let delta_prev = if !gens.is_empty() { Some(pullback(a, &res.proj_map(n - 1), &prev, &cochains)) } else { None };
        let mut reps = vec![Vec::new(); nv];
        let mut bounds = vec![Matrix::zeros(f, 0, 0); nv];
        let mut coord_offset = vec![0; nv];
        let piece_start = left_vertex.len();
        for u in 0..nv {
            let idx: Vec<usize> = (0..cochains.len()).filter(|&k| a.basis()[cochains.coords[k].1].start == u).collect();
            let pidx: Vec<usize> = (0..prev.len()).filter(|&k| a.basis()[prev.coords[k].1].start == u).collect();
            let z = match &delta {
                Some(d) => d.select_columns(&idx).null_space(),
                None => Matrix::identity(f, idx.len()),
            };
            let b = match &delta_prev {
                Some(d) => d.select_rows(&idx).select_columns(&pidx).column_space(),
                None => Matrix::zeros(f, idx.len(), 0),
            };
            let mut space = RowSpace::spanned_by(f, idx.len(), b.column_vectors());
            coord_offset[u] = left_vertex.len() - piece_start;
            for zc in z.column_vectors() {
                if space.insert(zc.clone()) {
                    let mut full = vec![f.zero(); cochains.len()];
                    for (k, &i) in idx.iter().enumerate() {
                        full[i] = zc[k].clone();
                    }
                    left_vertex.push(u);
                    right_vertex.push(w);
                    reps_all.push((w, full.clone()));
                    reps[u].push(full);
                }
            }
            bounds[u] = b;
        }
        pieces.push(ExtPiece { res, cochains, reps, bounds, coord_offset });
    }
    // global offsets per piece
    let mut piece_offset = vec![0; nv];
    let mut acc = 0;
    for (w, p) in pieces.iter().enumerate() {
        piece_offset[w] = acc;
        acc += p.reps.iter().map(Vec::len).sum::<usize>();
    }
    let dim = acc;
    let to_global = |w: usize, z: &[F::Elem]| -> Vec<F::Elem> {
        let mut v = vec![f.zero(); dim];
        for (k, c) in pieces[w].coordinates(a, z) {
            v[piece_offset[w] + k] = c;
        }
        v
    };
    let q = a.quiver();
    let mut left_action = Vec::new();
    for ai in 0..q.num_arrows() {
        let x = a.arrow_basis_index(ai);
        let cols: Vec<Vec<F::Elem>> = reps_all
            .iter()
            .map(|(w, z)| {
                let ch = &pieces[*w].cochains;
                let mut out = vec![f.zero(); ch.len()];
                for (k, c) in z.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    let (g, p) = ch.coords[k];
                    for (r, d) in a.mult_basis(x, p) {
                        let row = ch.index[&(g, *r)];
                        out[row] = f.add(&out[row], &f.mul(c, d));
                    }
                }
                to_global(*w, &out)
            })
            .collect();
        left_action.push(Matrix::from_columns(f, dim, &cols));
    }
    let mut right_action = Vec::new();
    for bi in 0..q.num_arrows() {
        let arr = q.arrow(bi);
        let (w, w2) = (arr.source, arr.target);
        let phi = left_mult_on_injectives(a, bi, &injectives[w2], &injectives[w]);
        let lift = lift_chain_map(&phi, &pieces[w2].res, &pieces[w].res, n);
        let mut cols = vec![vec![f.zero(); dim]; dim];
        if let Some(fn_) = lift.get(n) {
            let src_v = pieces[w2].res.vertices.get(n).cloned().unwrap_or_default();
            let tgt_v = pieces[w].res.vertices.get(n).cloned().unwrap_or_default();
            if !src_v.is_empty() && !tgt_v.is_empty() {
                let pm = ProjMap::from_module_map(a, &src_v, &tgt_v, fn_);
                let pb = pullback(a, &pm, &pieces[w].cochains, &pieces[w2].cochains);
                for (k, (pw, z)) in reps_all.iter().enumerate() {
                    if *pw == w {
                        cols[k] = to_global(w2, &pb.mul_vec(z));
                    }
                }
            }
        }
        right_action.push(Matrix::from_columns(f, dim, &cols));
    }
    Ok(ExtBimodule { dim, left_vertex, right_vertex, left_action, right_action })
}

/// One tensor power `T_i` with actions and, for `i ≥ 2`, its presentation
/// as a quotient of `T_{i-1} ⊗_k E`.
#[derive(Clone, Debug)]
struct Level<F: Field> {
    lv: Vec<usize>,
    rv: Vec<usize>,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
    /// Representative of each basis element as `Σ c (t, e)`.
    section: Vec<Vec<(usize, usize, F::Elem)>>,
    pair_index: HashMap<(usize, usize), usize>,
    proj: Matrix<F>,
}

impl<F: Field> Level<F> {
    fn dim(&self) -> usize {
        self.lv.len()
    }

    /// Class of `z ⊗ e` for `z` in the previous level.
    fn tensor(&self, f: &F, z: &[F::Elem], e: usize) -> Vec<F::Elem> {
        let mut pure = vec![f.zero(); self.pair_index.len()];
        for (t, c) in z.iter().enumerate() {
            if !f.is_zero(c) {
                if let Some(&k) = self.pair_index.get(&(t, e)) {
                    pure[k] = c.clone();
                }
            }
        }
        self.proj.mul_vec(&pure)
    }
}

fn level_zero<F: Field>(a: &Algebra<F>) -> Level<F> {
    let f = a.field();
    let d = a.dim();
    let q = a.quiver();
    let act = |left: bool| -> Vec<Matrix<F>> {
        (0..q.num_arrows())
            .map(|ai| {
                let x = a.arrow_basis_index(ai);
                let mut m = Matrix::zeros(f, d, d);
                for p in 0..d {
                    let prod = if left { a.mult_basis(x, p) } else { a.mult_basis(p, x) };
                    for (k, c) in prod {
                        m.set(*k, p, c.clone());
                    }
                }
                m
            })
            .collect()
    };
    Level {
        lv: a.basis().iter().map(|p| p.start).collect(),
        rv: a.basis().iter().map(|p| p.end).collect(),
        left: act(true),
        right: act(false),
        section: Vec::new(),
        pair_index: HashMap::new(),
        proj: Matrix::zeros(f, 0, 0),
    }
}

fn level_one<F: Field>(e: &ExtBimodule<F>) -> Level<F> {
    let f = e.left_action.first().map(|m| m.field().clone());
    let f = f.unwrap_or_else(|| panic!("algebra without arrows has no Ext bimodule"));
    Level {
        lv: e.left_vertex.clone(),
        rv: e.right_vertex.clone(),
        left: e.left_action.clone(),
        right: e.right_action.clone(),
        section: (0..e.dim).map(|k| vec![(0, k, f.one())]).collect(),
        pair_index: HashMap::new(),
        proj: Matrix::zeros(&f, 0, 0),
    }
}

fn next_level<F: Field>(a: &Algebra<F>, prev: &Level<F>, e: &ExtBimodule<F>) -> Level<F> {
    let f = a.field();
    let q = a.quiver();
    let mut pairs = Vec::new();
    for t in 0..prev.dim() {
        for k in 0..e.dim {
            if prev.rv[t] == e.left_vertex[k] {
                pairs.push((t, k));
            }
        }
    }
    let pair_index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let np = pairs.len();
    let mut rels = RowSpace::new(f, np);
    for ai in 0..q.num_arrows() {
        let arr = q.arrow(ai);
        for t in (0..prev.dim()).filter(|&t| prev.rv[t] == arr.source) {
            let ta = prev.right[ai].column(t);
            for k in (0..e.dim).filter(|&k| e.left_vertex[k] == arr.target) {
                let ae = e.left_action[ai].column(k);
                let mut v = vec![f.zero(); np];
                for (t2, c) in ta.iter().enumerate() {
                    if !f.is_zero(c) {
                        let i = pair_index[&(t2, k)];
                        v[i] = f.add(&v[i], c);
                    }
                }
                for (k2, c) in ae.iter().enumerate() {
                    if !f.is_zero(c) {
                        let i = pair_index[&(t, k2)];
                        v[i] = f.sub(&v[i], c);
                    }
                }
                rels.insert(v);
            }
        }
    }
    let qd = quotient_data(f, np, &rels.as_columns());
    let dim = qd.complement.cols();
    let section: Vec<Vec<(usize, usize, F::Elem)>> = (0..dim)
        .map(|j| {
            (0..np)
                .filter(|&i| !f.is_zero(qd.complement.get(i, j)))
                .map(|i| (pairs[i].0, pairs[i].1, qd.complement.get(i, j).clone()))
                .collect()
        })
        .collect();
    let lv = section.iter().map(|s| prev.lv[s[0].0]).collect();
    let rv = section.iter().map(|s| e.right_vertex[s[0].1]).collect();
    let mut level = Level { lv, rv, left: Vec::new(), right: Vec::new(), section, pair_index, proj: qd.projection };
    let n_arrows = q.num_arrows();
    for ai in 0..n_arrows {
        let cols: Vec<Vec<F::Elem>> = (0..dim)
            .map(|j| {
                let mut acc = vec![f.zero(); dim];
                for (t, k, c) in level.section[j].clone() {
                    let at = prev.left[ai].column(t);
                    let img = level.tensor(f, &at, k);
                    for (x, y) in acc.iter_mut().zip(img) {
                        *x = f.add(x, &f.mul(&c, &y));
                    }
                }
                acc
            })
            .collect();
        level.left.push(Matrix::from_columns(f, dim, &cols));
    }
    for bi in 0..n_arrows {
        let cols: Vec<Vec<F::Elem>> = (0..dim)
            .map(|j| {
                let mut acc = vec![f.zero(); np];
                for (t, k, c) in &level.section[j] {
                    let eb = e.right_action[bi].column(*k);
                    for (k2, d) in eb.iter().enumerate() {
                        if !f.is_zero(d) {
                            if let Some(&i) = level.pair_index.get(&(*t, k2)) {
                                acc[i] = f.add(&acc[i], &f.mul(c, d));
                            }
                        }
                    }
                }
                level.proj.mul_vec(&acc)
            })
            .collect();
        level.right.push(Matrix::from_columns(f, dim, &cols));
    }
    level
}

/// The tensor algebra `T_Λ E`, graded by tensor degree.
#[derive(Clone, Debug)]
pub struct PreprojectiveAlgebra<F: Field> {
    pub algebra: FinDimAlgebra<F>,
    pub graded_dims: Vec<usize>,
    pub bimodule: ExtBimodule<F>,
}

pub fn preprojective_algebra<F: Field>(a: &Algebra<F>, n: usize, cap: usize) -> Result<PreprojectiveAlgebra<F>> {
    let e = ext_bimodule(a, n)?;
    tensor_algebra(a, e, cap)
}

fn tensor_algebra<F: Field>(a: &Algebra<F>, e: ExtBimodule<F>, cap: usize) -> Result<PreprojectiveAlgebra<F>> {
    let f = a.field();
    let mut levels = vec![level_zero(a)];
    if e.dim > 0 {
        levels.push(level_one(&e));
        loop {
            let next = next_level(a, levels.last().unwrap(), &e);
            if next.dim() == 0 {
                break;
            }
            if levels.len() > cap {
                return Err(Error::NotTauFinite { cap, last_dim: next.dim() });
            }
            levels.push(next);
        }
    }
    let graded_dims: Vec<usize> = levels.iter().map(Level::dim).collect();
    let offsets: Vec<usize> = graded_dims.iter().scan(0, |s, d| {
        let o = *s;
        *s += d;
        Some(o)
    }).collect();
    let total: usize = graded_dims.iter().sum();
    let depth = levels.len();
    // prod[i][j][x][y] as a vector in level i + j (empty when i + j ≥ depth)
    let mut prod: Vec<Vec<Vec<Vec<Vec<F::Elem>>>>> = vec![vec![Vec::new(); depth]; depth];
    let path_right = |lvl: &Level<F>, x: Vec<F::Elem>, p: usize| -> Vec<F::Elem> {
        let path = &a.basis()[p];
        if path.is_trivial() {
            let keep = |k: usize| lvl.rv[k] == path.start;
            return x.into_iter().enumerate().map(|(k, c)| if keep(k) { c } else { f.zero() }).collect();
        }
        let mut cur = x;
        for &ai in &path.arrows {
            cur = lvl.right[ai].mul_vec(&cur);
        }
        cur
    };
    let path_left = |lvl: &Level<F>, y: Vec<F::Elem>, p: usize| -> Vec<F::Elem> {
        let path = &a.basis()[p];
        if path.is_trivial() {
            let keep = |k: usize| lvl.lv[k] == path.start;
            return y.into_iter().enumerate().map(|(k, c)| if keep(k) { c } else { f.zero() }).collect();
        }
        let mut cur = y;
        for &ai in path.arrows.iter().rev() {
            cur = lvl.left[ai].mul_vec(&cur);
        }
        cur
    };
    let unit = |d: usize, k: usize| -> Vec<F::Elem> {
        let mut v = vec![f.zero(); d];
        v[k] = f.one();
        v
    };
    for j in 0..depth {
        for i in 0..depth {
            if i + j >= depth {
                continue;
            }
            let (di, dj) = (graded_dims[i], graded_dims[j]);
            let mut table = vec![vec![Vec::new(); dj]; di];
            for x in 0..di {
                for y in 0..dj {
                    table[x][y] = if j == 0 {
                        path_right(&levels[i], unit(di, x), y)
                    } else if i == 0 {
                        path_left(&levels[j], unit(dj, y), x)
                    } else if j == 1 {
                        levels[i + 1].tensor(f, &unit(di, x), y)
                    } else {
                        let mut acc = vec![f.zero(); graded_dims[i + j]];
                        for (t, k, c) in &levels[j].section[y] {
                            let xy: &Vec<F::Elem> = &prod[i][j - 1][x][*t];
                            let img = levels[i + j].tensor(f, xy, *k);
                            for (s, v) in acc.iter_mut().zip(img) {
                                *s = f.add(s, &f.mul(c, &v));
                            }
                        }
                        acc
                    };
                }
            }
            prod[i][j] = table;
        }
    }
    let mut labels: Vec<String> = a.basis().iter().map(|p| p.format(a.quiver())).collect();
    for (i, d) in graded_dims.iter().enumerate().skip(1) {
        labels.extend((0..*d).map(|k| format!("t{i}_{k}")));
    }
    let mut grading = Vec::with_capacity(total);
    for (i, d) in graded_dims.iter().enumerate() {
        grading.extend(std::iter::repeat_n(i as u32, *d));
    }
    let deg_of: Vec<(usize, usize)> = (0..total).map(|g| {
        let i = grading[g] as usize;
        (i, g - offsets[i])
    }).collect();
    let mut mult = Vec::with_capacity(total * total);
    for g in 0..total {
        for h in 0..total {
            let ((i, x), (j, y)) = (deg_of[g], deg_of[h]);
            if i + j >= depth {
                mult.push(Vec::new());
                continue;
            }
            let v = &prod[i][j][x][y];
            mult.push(v.iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(k, c)| (offsets[i + j] + k, c.clone())).collect());
        }
    }
    let idempotents = (0..a.num_vertices()).map(|v| unit(total, a.vertex_basis_index(v))).collect();
    let algebra = FinDimAlgebra::new(f, labels, mult, idempotents, Some(grading));
    Ok(PreprojectiveAlgebra { algebra, graded_dims, bimodule: e })
}
