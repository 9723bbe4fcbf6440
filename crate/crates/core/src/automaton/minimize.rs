use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::Dfa;

/// Moore partition refinement over the reachable states. The result is
/// numbered breadth-first from the start state, so equal languages give
/// identical automata.
pub(super) fn minimize(dfa: &Dfa) -> Dfa {
    let reachable = dfa.reachable_states();

    let mut class: HashMap<usize, usize> = reachable
        .iter()
        .map(|&s| (s, usize::from(dfa.is_accepting(s))))
        .collect();
    let mut class_count = class
        .values()
        .collect::<std::collections::HashSet<_>>()
        .len();

    loop {
        let mut signatures: HashMap<(usize, usize, usize), usize> = HashMap::new();
        let mut refined = HashMap::with_capacity(class.len());
        for &s in &reachable {
            let sig = (class[&s], class[&dfa.next(s, 0)], class[&dfa.next(s, 1)]);
            let next_id = signatures.len();
            refined.insert(s, *signatures.entry(sig).or_insert(next_id));
        }
        let refined_count = signatures.len();
        class = refined;
        if refined_count == class_count {
            break;
        }
        class_count = refined_count;
    }

    // Renumber classes in breadth-first order from the start.
    let mut order: HashMap<usize, usize> = HashMap::new();
    let mut reps: Vec<usize> = Vec::new();
    let mut queue = vec![dfa.start()];
    order.insert(class[&dfa.start()], 0);
    reps.push(dfa.start());
    let mut k = 0;
    while k < queue.len() {
        let s = queue[k];
        for b in 0..2 {
            let t = dfa.next(s, b);
            let c = class[&t];
            if let Entry::Vacant(e) = order.entry(c) {
                e.insert(reps.len());
                reps.push(t);
                queue.push(t);
            }
        }
        k += 1;
    }

    let transitions = reps
        .iter()
        .map(|&s| {
            [
                order[&class[&dfa.next(s, 0)]],
                order[&class[&dfa.next(s, 1)]],
            ]
        })
        .collect();
    let accepting = reps.iter().map(|&s| dfa.is_accepting(s)).collect();
    let labels = (1..=reps.len()).map(|i| i.to_string()).collect();
    Dfa::new(transitions, 0, accepting)
        .expect("quotient of a complete automaton is complete")
        .with_labels(labels)
}
