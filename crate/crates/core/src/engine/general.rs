use crate::formula::Formula;
use crate::partition::Partition;

use super::{EngineError, EngineKind, Search, Verdict};

/// Decides `sigma ⊭ phi` for any theory and positive query.
///
/// A partition `(P, N)` witnesses non-entailment when
///
/// - (a) `mods(ob(P, N))` is nonempty and induces `(P, N)`,
/// - (b) `sigma(P, N) ∧ ¬phi(ob(P, N))` is satisfiable, and
/// - (c) every other partition `(P', N')` has an unsatisfiable reduct (c1),
///   is not induced by `(mods(ob(P', N')), mods(ob(P, N)))` (c2), or has
///   `ob(P, N) ∧ ¬ob(P', N')` satisfiable (c3).
///
/// Partitions are tried in binary-counter order and the first witness wins.
pub fn mbnf_not_entails(sigma: &Formula, phi: &Formula) -> Result<Verdict, EngineError> {
    let mut search = Search::new(sigma, phi)?;
    let found = run(&mut search);
    Ok(search.finish(EngineKind::General, found))
}

fn run(search: &mut Search<'_>) -> Option<(u64, Partition, crate::propsat::Assignment)> {
    let len = search.table.len();
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
        let minimal = is_minimal(search, index);
        search.stats.minimality_sat_calls += search.sat.calls() - before;
        if minimal {
            return Some((index, partition, world));
        }
    }
    None
}

/// Condition (c), stopping at the first competitor that violates it.
fn is_minimal(search: &mut Search<'_>, index: u64) -> bool {
    let len = search.table.len();
    let ob = &search.obs[index as usize];
    for other in (0..search.partition_count()).filter(|&j| j != index) {
        search.stats.competitors += 1;
        let competitor = Partition::from_index(len, other);
        let other_ob = &search.obs[other as usize];
        let unsatisfiable = !search.sat.satisfiable(&search.reducts[other as usize]);
        if unsatisfiable {
            continue;
        }
        if search.table.prt(&search.sat, other_ob, ob) != competitor {
            continue;
        }
        let not_weaker = search.sat.satisfiable(&Formula::and(ob.clone(), Formula::not(other_ob.clone())));
        if not_weaker {
            continue;
        }
        return false;
    }
    true
}
