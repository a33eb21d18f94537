//! Small helpers for permutations of `0..n` stored as image vectors.

/// Labels every point with the smallest point of its orbit under the group
/// generated by `gens`.
pub(crate) fn orbit_labels(n: usize, gens: &[&[usize]]) -> Vec<usize> {
    let mut label = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = start;
        stack.push(start);
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = g[x];
                if label[y] == usize::MAX {
                    label[y] = start;
                    stack.push(y);
                }
            }
        }
    }
    label
}

/// Groups points by label, returning the classes ordered by their label.
pub(crate) fn classes(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut slot = vec![usize::MAX; labels.len()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (x, &l) in labels.iter().enumerate() {
        if slot[l] == usize::MAX {
            slot[l] = out.len();
            out.push(Vec::new());
        }
        out[slot[l]].push(x);
    }
    out
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Proper 2-colouring of the graph on `0..n` whose adjacency is given by
/// `neighbours`, or `None` if it has an odd cycle (self-adjacency included).
pub(crate) fn two_colour<F, I>(n: usize, neighbours: F) -> Option<Vec<bool>>
where
    F: Fn(usize) -> I,
    I: IntoIterator<Item = usize>,
{
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut stack = Vec::new();
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        stack.push(start);
        while let Some(x) = stack.pop() {
            let cx = colour[x].unwrap();
            for y in neighbours(x) {
                match colour[y] {
                    None => {
                        colour[y] = Some(!cx);
                        stack.push(y);
                    }
                    Some(cy) if cy == cx => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
}
