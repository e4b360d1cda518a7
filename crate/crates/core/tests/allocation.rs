//! The enumerator must not allocate per visit.

use std::alloc::{GlobalAlloc, Layout, System};
use std::sync::atomic::{AtomicUsize, Ordering};

use fpfi::Enumerator;

struct Counting;

static ALLOCS: AtomicUsize = AtomicUsize::new(0);

unsafe impl GlobalAlloc for Counting {
    unsafe fn alloc(&self, layout: Layout) -> *mut u8 {
        ALLOCS.fetch_add(1, Ordering::Relaxed);
        System.alloc(layout)
    }

    unsafe fn dealloc(&self, ptr: *mut u8, layout: Layout) {
        System.dealloc(ptr, layout)
    }
}

#[global_allocator]
static GLOBAL: Counting = Counting;

#[test]
fn no_allocation_after_setup() {
    for n in [4usize, 6, 7] {
        let mut e = Enumerator::new(n);
        let before = ALLOCS.load(Ordering::Relaxed);
        let mut visited = 0u64;
        let mut fold = 0usize;
        e.for_each(|v| {
            visited += 1;
            fold = fold.wrapping_mul(31).wrapping_add(v.slots()[0]);
        });
        let after = ALLOCS.load(Ordering::Relaxed);
        assert_eq!(after, before, "n = {n}: {visited} visits, fold {fold}");
    }
}
