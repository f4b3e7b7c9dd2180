use alloc::string::ToString;

use crate::error::ContractError;
use crate::formula::Formula;
use crate::partition::{substitute, Partition};
use crate::s5::{s5_valid, S5Query};

use super::{EngineError, EngineKind, Search, Verdict};

/// Decides `sigma ⊭ phi` for a flat theory and positive query.
///
/// Conditions (a) and (b) are those of [`super::mbnf_not_entails`]. The
/// minimality condition becomes a single S5 validity check of
/// `sigma(P_n, N) -> B ob(P, N)`, where `sigma(P_n, N)` replaces the `not`
/// atoms of `P` by `true` and every atom of `N` by `false`, keeping the `B`
/// atoms of `P`.
pub fn flat_not_entails(sigma: &Formula, phi: &Formula) -> Result<Verdict, EngineError> {
    if !sigma.is_flat() {
        return Err(ContractError::NotFlat(sigma.to_string()).into());
    }
    let mut search = Search::new(sigma, phi)?;
    let len = search.table.len();
    let mut found = None;
    for index in 0..search.partition_count() {
        search.stats.partitions += 1;
        let partition = Partition::from_index(len, index);
        if !search.self_supporting(index, &partition) {
            continue;
        }
        let Some(world) = search.refuting_world(index) else {
            continue;
        };
        search.stats.candidates += 1;
        let before = search.sat.calls();
        search.stats.s5_checks += 1;
        let minimal = s5_valid(&search.sat, &minimality_query(&search, &partition)).is_valid();
        search.stats.minimality_sat_calls += search.sat.calls() - before;
        if minimal {
            found = Some((index, partition, world));
            break;
        }
    }
    Ok(search.finish(EngineKind::Flat, found))
}

fn minimality_query(search: &Search<'_>, partition: &Partition) -> S5Query {
    let table = &search.table;
    let kept = substitute(search.sigma, &|atom| {
        let i = table.position(atom)?;
        match (atom, partition.in_p(i)) {
            (Formula::Believe(_), true) => None,
            (_, side) => Some(side),
        }
    });
    let ob = search.obs[partition.index() as usize].clone();
    S5Query::new(Formula::implies(kept, Formula::believe(ob)))
        .expect("reduct of a flat theory is flat and positive")
}
