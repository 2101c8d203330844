//! Scoped-thread fan-out over disjoint output ranges.
//!
//! Callers hand in a thread budget; results are written to disjoint slices or
//! merged in range order, so the output never depends on the budget.

use std::ops::Range;

/// Applies `f(offset, chunk)` over contiguous chunks of `data`, using at most
/// `threads` worker threads. With a budget of 1 (or tiny data) runs inline.
pub(crate) fn for_chunks<T, F>(threads: usize, data: &mut [T], f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    let threads = threads.max(1).min(data.len().max(1));
    if threads == 1 {
        f(0, data);
        return;
    }
    let chunk = data.len().div_ceil(threads);
    std::thread::scope(|scope| {
        let mut rest = data;
        let mut offset = 0;
        while !rest.is_empty() {
            let take = chunk.min(rest.len());
            let (head, tail) = rest.split_at_mut(take);
            rest = tail;
            let f = &f;
            let base = offset;
            scope.spawn(move || f(base, head));
            offset += take;
        }
    });
}

/// Splits `0..len` into at most `threads` ranges and maps each through `f`,
/// returning the results in range order.
pub(crate) fn map_ranges<R, F>(threads: usize, len: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(Range<u64>) -> R + Sync,
{
    let threads = threads.max(1).min(len.max(1) as usize);
    if threads == 1 {
        return vec![f(0..len)];
    }
    let chunk = len.div_ceil(threads as u64);
    let ranges: Vec<Range<u64>> = (0..threads as u64)
        .map(|i| (i * chunk)..((i + 1) * chunk).min(len))
        .filter(|r| r.start < r.end)
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|r| {
                let f = &f;
                scope.spawn(move || f(r))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}
