//! Homomorphism spaces, endomorphism radicals and the socle of a module
//! over its endomorphism ring. The ground field is the rationals, so the
//! radical is computed with the trace form (valid in characteristic zero).

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::coxeter::Vertex;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::quiver::{QuiverRepresentation, Subrepresentation};

/// A vertex-indexed family of linear maps `M_v -> N_v`.
pub type Morphism = BTreeMap<Vertex, Matrix>;

fn check_same_quiver(m: &QuiverRepresentation, n: &QuiverRepresentation) -> Result<()> {
    if m.dynkin() != n.dynkin() {
        return Err(Error::Mismatch(m.dynkin().to_string(), n.dynkin().to_string()));
    }
    Ok(())
}

/// Basis of `Hom(M, N)`.
pub fn hom_basis(m: &QuiverRepresentation, n: &QuiverRepresentation) -> Result<Vec<Morphism>> {
    check_same_quiver(m, n)?;
    let vertices = m.quiver().vertices();
    let mut offset = BTreeMap::new();
    let mut total = 0;
    for &v in &vertices {
        offset.insert(v, total);
        total += n.dim(v) * m.dim(v);
    }
    let var = |v: Vertex, r: usize, c: usize| offset[&v] + r * m.dim(v) + c;
    let mut eqs: Vec<Vec<Q>> = Vec::new();
    for &a in m.quiver().arrows() {
        // N(a) f_head = f_tail M(a)
        let (na, ma) = (n.mat(a), m.mat(a));
        for r in 0..n.dim(a.tail) {
            for c in 0..m.dim(a.head) {
                let mut row = vec![Q::zero(); total];
                for k in 0..n.dim(a.head) {
                    if !na[(r, k)].is_zero() {
                        row[var(a.head, k, c)] += &na[(r, k)];
                    }
                }
                for k in 0..m.dim(a.tail) {
                    if !ma[(k, c)].is_zero() {
                        row[var(a.tail, r, k)] -= &ma[(k, c)];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                }
            }
        }
    }
    let sol = if eqs.is_empty() {
        (0..total)
            .map(|k| {
                let mut e = vec![Q::zero(); total];
                e[k] = num_traits::One::one();
                e
            })
            .collect()
    } else {
        Matrix::from_rows(eqs)?.nullspace()
    };
    Ok(sol
        .into_iter()
        .map(|x| {
            vertices
                .iter()
                .map(|&v| {
                    let mut f = Matrix::zeros(n.dim(v), m.dim(v));
                    for r in 0..n.dim(v) {
                        for c in 0..m.dim(v) {
                            f[(r, c)] = x[var(v, r, c)].clone();
                        }
                    }
                    (v, f)
                })
                .collect()
        })
        .collect())
}

pub fn hom_dim(m: &QuiverRepresentation, n: &QuiverRepresentation) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

fn compose(f: &Morphism, g: &Morphism) -> Morphism {
    f.iter().map(|(v, a)| (*v, a.mul(&g[v]))).collect()
}

fn combine(basis: &[Morphism], coeffs: &[Q]) -> Morphism {
    let mut out: Morphism = basis[0]
        .iter()
        .map(|(v, a)| (*v, Matrix::zeros(a.rows(), a.cols())))
        .collect();
    for (f, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (v, a) in f {
            let s = out[v].add(&a.scale(c));
            out.insert(*v, s);
        }
    }
    out
}

fn flatten(f: &Morphism) -> Vec<Q> {
    f.values().flat_map(|a| a.to_rows().into_iter().flatten()).collect()
}

fn trace(f: &Morphism) -> Q {
    f.values().map(Matrix::trace).sum()
}

/// Basis of the radical of `End(M)` via the trace form.
pub fn end_radical(m: &QuiverRepresentation) -> Result<(Vec<Morphism>, Vec<Morphism>)> {
    let e = hom_basis(m, m)?;
    if e.is_empty() {
        return Ok((e, Vec::new()));
    }
    let gram: Vec<Vec<Q>> = e
        .iter()
        .map(|x| e.iter().map(|y| trace(&compose(x, y))).collect())
        .collect();
    let rad = Matrix::from_rows(gram)?
        .nullspace()
        .iter()
        .map(|c| combine(&e, c))
        .collect();
    Ok((e, rad))
}

/// `{m in M : f m = 0 for all f in rad End(M)}`.
pub fn socle_over_end(m: &QuiverRepresentation) -> Result<Subrepresentation> {
    let (_, rad) = end_radical(m)?;
    let mut spans = BTreeMap::new();
    for v in m.quiver().vertices() {
        let d = m.dim(v);
        if d == 0 {
            continue;
        }
        let rows: Vec<Vec<Q>> = rad.iter().flat_map(|f| f[&v].to_rows()).collect();
        let kernel = if rows.is_empty() {
            Matrix::identity(d)
        } else {
            Matrix::from_columns(d, &Matrix::from_rows(rows)?.nullspace())
        };
        spans.insert(v, kernel);
    }
    m.subrepresentation(&spans)
}

fn span_basis(vs: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    if vs.is_empty() {
        return vs;
    }
    let len = vs[0].len();
    let e = Matrix::from_columns(len, &vs).column_echelon();
    (0..e.cols()).map(|c| e.column(c)).collect()
}

/// Checks that the trace-form radical is a two-sided ideal of `End(M)` and
/// that its powers reach zero.
pub fn check_radical(m: &QuiverRepresentation) -> Result<()> {
    let (e, rad) = end_radical(m)?;
    if rad.is_empty() {
        return Ok(());
    }
    let rad_span = span_basis(rad.iter().map(flatten).collect());
    let len = rad_span[0].len();
    let rad_mat = Matrix::from_columns(len, &rad_span);
    for x in &e {
        for r in &rad {
            for p in [compose(x, r), compose(r, x)] {
                if rad_mat.echelon_coordinates(&flatten(&p)).is_none() {
                    return Err(Error::Consistency("radical is not an ideal".into()));
                }
            }
        }
    }
    let mut power = rad.clone();
    for _ in 0..=m.total_dim() {
        let next: Vec<Vec<Q>> = power
            .iter()
            .flat_map(|p| rad.iter().map(move |r| flatten(&compose(p, r))))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        if next.is_empty() {
            return Ok(());
        }
        // rebuild morphisms from the reduced span
        let basis = span_basis(next);
        power = basis.iter().map(|v| unflatten(&rad[0], v)).collect();
    }
    Err(Error::Consistency("radical is not nilpotent".into()))
}

fn unflatten(shape: &Morphism, v: &[Q]) -> Morphism {
    let mut k = 0;
    shape
        .iter()
        .map(|(vert, a)| {
            let mut f = Matrix::zeros(a.rows(), a.cols());
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    f[(r, c)] = v[k].clone();
                    k += 1;
                }
            }
            (*vert, f)
        })
        .collect()
}

pub fn is_brick(m: &QuiverRepresentation) -> Result<bool> {
    Ok(hom_dim(m, m)? == 1)
}

/// Hom dimensions between all ordered pairs.
pub fn hom_matrix(ms: &[QuiverRepresentation]) -> Result<Vec<Vec<usize>>> {
    ms.iter()
        .map(|x| ms.iter().map(|y| hom_dim(x, y)).collect())
        .collect()
}

pub fn is_semibrick(ms: &[QuiverRepresentation]) -> Result<bool> {
    let h = hom_matrix(ms)?;
    Ok((0..ms.len()).all(|i| (0..ms.len()).all(|j| h[i][j] == usize::from(i == j))))
}

/// Isomorphism test for bricks.
pub fn iso_bricks(m: &QuiverRepresentation, n: &QuiverRepresentation) -> Result<bool> {
    check_same_quiver(m, n)?;
    if !is_brick(m)? || !is_brick(n)? {
        return Err(Error::Domain("iso_bricks expects bricks".into()));
    }
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let h = hom_basis(m, n)?;
    Ok(h.len() == 1 && h[0].values().all(Matrix::is_invertible))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DynkinType;
    use crate::quiver::BasisBuilder;

    fn uniserial_a2() -> QuiverRepresentation {
        // <2> -> <1>
        let mut b = BasisBuilder::new(DynkinType::a(2));
        let x1 = b.add(1);
        let x2 = b.add(2);
        b.send(x2, x1, 1);
        b.build().unwrap()
    }

    #[test]
    fn simples() {
        let t = DynkinType::a(3);
        let s1 = QuiverRepresentation::simple(t, 1).unwrap();
        let s2 = QuiverRepresentation::simple(t, 2).unwrap();
        assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
        assert!(is_brick(&s1).unwrap());
        assert!(!is_semibrick(&[s1.clone(), s1.clone()]).unwrap());
        assert!(is_semibrick(&[s1.clone(), s2.clone()]).unwrap());
        assert!(iso_bricks(&s1, &s1).unwrap());
        assert!(!iso_bricks(&s1, &s2).unwrap());
        let soc = socle_over_end(&s1).unwrap();
        assert_eq!(soc.rep, s1);
    }

    #[test]
    fn uniserial_is_brick_with_trivial_radical() {
        let m = uniserial_a2();
        assert!(is_brick(&m).unwrap());
        let soc = socle_over_end(&m).unwrap();
        assert_eq!(soc.rep.total_dim(), 2);
        check_radical(&m).unwrap();
    }

    #[test]
    fn direct_sum_with_nilpotent_map() {
        // S1 (+) (2 -> 1): End has a nilpotent part sending the top 2 to 1
        let mut b = BasisBuilder::new(DynkinType::a(2));
        let x1 = b.add(1);
        let x2 = b.add(2);
        b.add(1);
        b.send(x2, x1, 1);
        let m = b.build().unwrap();
        assert_eq!(hom_dim(&m, &m).unwrap(), 3);
        let (_, rad) = end_radical(&m).unwrap();
        assert_eq!(rad.len(), 1);
        check_radical(&m).unwrap();
        let soc = socle_over_end(&m).unwrap();
        // the radical maps the extra S1 onto the socle of 2 -> 1
        assert_eq!(soc.rep.total_dim(), 2);
        assert!(!is_brick(&m).unwrap());
    }

    #[test]
    fn iso_requires_bricks() {
        let mut b = BasisBuilder::new(DynkinType::a(2));
        b.add(1);
        b.add(1);
        let m = b.build().unwrap();
        assert!(iso_bricks(&m, &m).is_err());
    }

    #[test]
    fn hom_is_intertwining() {
        let m = uniserial_a2();
        let s1 = QuiverRepresentation::simple(DynkinType::a(2), 1).unwrap();
        // S1 embeds as the socle, and M maps onto S2 only
        assert_eq!(hom_dim(&s1, &m).unwrap(), 1);
        assert_eq!(hom_dim(&m, &s1).unwrap(), 0);
        for f in hom_basis(&s1, &m).unwrap() {
            for &a in m.quiver().arrows() {
                let lhs = m.mat(a).mul(&f[&a.head]);
                let rhs = f[&a.tail].mul(s1.mat(a));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
