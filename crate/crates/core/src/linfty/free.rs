use super::algebra::{AlgebraError, GVector, Generator, Presentation};
use crate::linalg::{solve_canonical, Subspace};
use crate::rational::Rational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

type Word = Vec<usize>;
type Poly = BTreeMap<Word, Rational>;

struct Letters {
    degrees: Vec<i32>,
    symbols: Vec<String>,
    free: usize,
}

impl Letters {
    fn word_degree(&self, w: &[usize]) -> i32 {
        w.iter().map(|&l| self.degrees[l]).sum()
    }

    fn poly_degree(&self, p: &Poly) -> i32 {
        p.keys().next().map(|w| self.word_degree(w)).unwrap_or(0)
    }

    fn commutator(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = Poly::new();
        let swap_odd = (self.poly_degree(a) * self.poly_degree(b)).rem_euclid(2) == 1;
        for (u, x) in a {
            for (v, y) in b {
                let c = x * y;
                let uv: Word = u.iter().chain(v).copied().collect();
                let vu: Word = v.iter().chain(u).copied().collect();
                add(&mut out, uv, c.clone());
                add(&mut out, vu, if swap_odd { c } else { -c });
            }
        }
        out
    }

    fn differential(&self, p: &Poly) -> Poly {
        let mut out = Poly::new();
        for (w, c) in p {
            let mut deg = 0;
            for (j, &l) in w.iter().enumerate() {
                if l < self.free {
                    let mut v = w.clone();
                    v[j] = l + self.free;
                    add(&mut out, v, if deg % 2 == 0 { c.clone() } else { -c.clone() });
                }
                deg += self.degrees[l];
            }
        }
        out
    }
}

fn add(p: &mut Poly, w: Word, c: Rational) {
    let e = p.entry(w.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&w);
    }
}

fn words(letters: usize, len: usize) -> Vec<Word> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..letters).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

/// The free dg Lie algebra on the given generators (with their differentials
/// `d<symbol>` adjoined as free generators) modulo brackets of length
/// greater than `class`. Basis elements are right-normed brackets named
/// like `[x1,[x1,x2]]`.
pub fn free_nilpotent_dg_lie(name: &str, generators: &[(&str, i32)], class: usize) -> Result<Presentation, AlgebraError> {
    let m = generators.len();
    let mut degrees: Vec<i32> = generators.iter().map(|g| g.1).collect();
    degrees.extend(generators.iter().map(|g| g.1 + 1));
    let mut symbols: Vec<String> = generators.iter().map(|g| g.0.to_string()).collect();
    symbols.extend(generators.iter().map(|g| format!("d{}", g.0)));
    let letters = Letters { degrees, symbols, free: m };
    let nl = 2 * m;

    // basis per length: (symbol, polynomial)
    let mut by_len: Vec<Vec<(String, Poly)>> = vec![vec![]];
    by_len.push(
        (0..nl)
            .map(|l| (letters.symbols[l].clone(), Poly::from([(vec![l], Rational::one())])))
            .collect(),
    );
    let mut coords: Vec<BTreeMap<Word, usize>> = vec![BTreeMap::new()];
    coords.push(words(nl, 1).into_iter().enumerate().map(|(i, w)| (w, i)).collect());
    for len in 2..=class {
        let index: BTreeMap<Word, usize> = words(nl, len).into_iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut span = Subspace::zero(index.len());
        let mut chosen = Vec::new();
        for (a_sym, a) in by_len[1].clone() {
            for (b_sym, b) in by_len[len - 1].clone() {
                let p = letters.commutator(&a, &b);
                let dense = to_dense(&p, &index);
                if span.contains(&dense) {
                    continue;
                }
                span = span.sum(&Subspace::span(index.len(), [dense]));
                chosen.push((format!("[{a_sym},{b_sym}]"), p));
            }
        }
        by_len.push(chosen);
        coords.push(index);
    }

    let mut gens = Vec::new();
    let mut offset = vec![0usize; class + 2];
    for len in 1..=class {
        offset[len] = gens.len();
        for (sym, p) in &by_len[len] {
            gens.push(Generator { symbol: sym.clone(), degree: letters.poly_degree(p) });
        }
    }
    let columns: Vec<Vec<Vec<Rational>>> = (0..=class)
        .map(|len| by_len[len].iter().map(|(_, p)| to_dense(p, &coords[len])).collect())
        .collect();
    let express = |p: &Poly, len: usize| -> GVector {
        let cols = &columns[len];
        let rows = coords[len].len();
        let a: Vec<Vec<Rational>> = (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let x = solve_canonical(&a, cols.len(), &to_dense(p, &coords[len])).expect("element of the free Lie algebra");
        GVector::from_terms(x.into_iter().enumerate().map(|(j, c)| (offset[len] + j, c)))
    };

    let mut entries = Vec::new();
    for len in 1..=class {
        for (j, (_, p)) in by_len[len].iter().enumerate() {
            let dp = letters.differential(p);
            if !dp.is_empty() {
                entries.push((vec![offset[len] + j], express(&dp, len)));
            }
        }
    }
    for la in 1..=class {
        for lb in la..=class - la {
            for (ja, (_, a)) in by_len[la].iter().enumerate() {
                for (jb, (_, b)) in by_len[lb].iter().enumerate() {
                    let (ia, ib) = (offset[la] + ja, offset[lb] + jb);
                    if ib < ia {
                        continue;
                    }
                    let p = letters.commutator(a, b);
                    if !p.is_empty() {
                        entries.push((vec![ia, ib], express(&p, la + lb)));
                    }
                }
            }
        }
    }
    Presentation::new(name, gens, entries, Some(2))
}

fn to_dense(p: &Poly, index: &BTreeMap<Word, usize>) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); index.len()];
    for (w, c) in p {
        v[index[w]] = c.clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_two_generators_class_three() {
        // a, b, da, db with brackets up to length three
        let p = free_nilpotent_dg_lie("f", &[("a", 0), ("b", -1)], 3).unwrap();
        assert!(p.check_jacobi(4).passed());
        assert_eq!(p.lower_central(64).index, Some(4));
    }
}
