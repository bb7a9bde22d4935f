//! Kochen–Specker colorability of projector contexts.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomic::{join_fields, CycloField, CycloNum};
use crate::error::{Error, Result};
use crate::linalg::CycloMatrix;
use crate::pauli::{DimFactorization, PauliGroup, PauliOp};

/// True when no 0/1 assignment makes exactly one projector true in every
/// complete context (summing to `I`) while never making two orthogonal
/// projectors true. Each context must consist of mutually orthogonal
/// projectors; equal projectors in different contexts are identified.
pub fn ks_noncolorable(contexts: &[Vec<CycloMatrix>]) -> Result<bool> {
    let all: Vec<&CycloMatrix> = contexts.iter().flatten().collect();
    let Some(first) = all.first() else {
        return Ok(false);
    };
    let n = first.rows();
    if all.iter().any(|p| p.rows() != n || p.cols() != n) {
        return Err(Error::Dimension("projectors of different sizes".into()));
    }
    let field = all.iter().fold(first.field().clone(), |f, p| join_fields(&f, p.field()));
    let mut rays: Vec<CycloMatrix> = Vec::new();
    let mut ctx: Vec<Vec<usize>> = Vec::with_capacity(contexts.len());
    let mut complete: Vec<bool> = Vec::with_capacity(contexts.len());
    let identity = CycloMatrix::identity(&field, n);
    for (c, members) in contexts.iter().enumerate() {
        let members: Vec<CycloMatrix> = members.iter().map(|p| p.lift(&field)).collect::<Result<_>>()?;
        for i in 0..members.len() {
            if &members[i] * &members[i] != members[i] {
                return Err(Error::InvalidInput(format!("context {c}: member {i} is not a projector")));
            }
            for j in i + 1..members.len() {
                if !(&members[i] * &members[j]).is_zero() {
                    return Err(Error::InvalidInput(format!("context {c}: members {i} and {j} are not orthogonal")));
                }
            }
        }
        let sum = members.iter().fold(CycloMatrix::zero(&field, n, n), |acc, p| &acc + p);
        complete.push(sum == identity);
        let idx = members
            .into_iter()
            .map(|p| match rays.iter().position(|r| *r == p) {
                Some(i) => i,
                None => {
                    rays.push(p);
                    rays.len() - 1
                }
            })
            .collect();
        ctx.push(idx);
    }
    let m = rays.len();
    let mut orth = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a + 1..m {
            let o = (&rays[a] * &rays[b]).is_zero();
            orth[a][b] = o;
            orth[b][a] = o;
        }
    }
    let required: Vec<Vec<usize>> = ctx.iter().zip(&complete).filter(|(_, c)| **c).map(|(r, _)| r.clone()).collect();
    Ok(!colorable(&required, &orth))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Free,
    True,
    False,
}

/// Picks a true ray in the most constrained unsatisfied context and forces
/// everything orthogonal to it false.
fn colorable(required: &[Vec<usize>], orth: &[Vec<bool>]) -> bool {
    fn go(required: &[Vec<usize>], orth: &[Vec<bool>], state: &mut Vec<State>) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for (c, members) in required.iter().enumerate() {
            if members.iter().any(|&r| state[r] == State::True) {
                continue;
            }
            let free = members.iter().filter(|&&r| state[r] == State::Free).count();
            if free == 0 {
                return false;
            }
            if best.map_or(true, |(_, f)| free < f) {
                best = Some((c, free));
            }
        }
        let Some((c, _)) = best else {
            return true;
        };
        for &r in &required[c] {
            if state[r] != State::Free {
                continue;
            }
            let saved = state.clone();
            state[r] = State::True;
            for (s, &o) in orth[r].iter().enumerate() {
                if o {
                    state[s] = State::False;
                }
            }
            if go(required, orth, state) {
                return true;
            }
            *state = saved;
            state[r] = State::False;
        }
        false
    }
    go(required, orth, &mut vec![State::Free; orth.len()])
}

/// Joint eigenprojectors `(I ± A)(I ± B)/4` of the first two operators of
/// each line of commuting qubit operators, with `A`, `B` made Hermitian.
pub fn stabilizer_contexts(dims: &DimFactorization, lines: &[Vec<PauliOp>]) -> Result<Vec<Vec<CycloMatrix>>> {
    if dims.factors().iter().any(|&f| f != 2) {
        return Err(Error::InvalidInput(format!("stabilizer contexts need qubit factors, got {dims}")));
    }
    let field = CycloField::new(4);
    let group = PauliGroup::over(dims, &field)?;
    let i = CycloNum::root_of_unity(&field, 4, 1)?;
    let hermitian = |op: &PauliOp| {
        let k = op.labels().iter().filter(|&&l| l == (1, 1)).count();
        let phase = (0..k).fold(CycloNum::one(&field), |acc, _| &acc * &i);
        group.matrix(op).scale(&phase)
    };
    let d = group.dim();
    let id = CycloMatrix::identity(&field, d);
    let quarter = CycloNum::from_fraction(&field, 1, 4);
    let mut out = Vec::with_capacity(lines.len());
    for (l, line) in lines.iter().enumerate() {
        if line.len() < 2 {
            return Err(Error::InvalidInput(format!("line {l} has fewer than two operators")));
        }
        let (a, b) = (hermitian(&line[0]), hermitian(&line[1]));
        if &a * &b != &b * &a {
            return Err(Error::InvalidInput(format!("line {l}: {} and {} do not commute", line[0], line[1])));
        }
        if line[0].is_identity() || line[1].is_identity() || line[0] == line[1] {
            return Err(Error::InvalidInput(format!("line {l}: generators must be distinct non-identity operators")));
        }
        let mut ctx = Vec::with_capacity(4);
        for s in [1i64, -1] {
            for t in [1i64, -1] {
                let pa = &id + &a.scale(&CycloNum::from_int(&field, s));
                let pb = &id + &b.scale(&CycloNum::from_int(&field, t));
                ctx.push((&pa * &pb).scale(&quarter));
            }
        }
        out.push(ctx);
    }
    Ok(out)
}
