#pragma once

#include <cstddef>
#include <new>

#ifdef __linux__
#include <sys/mman.h>
#endif

namespace maxwist {

// Allocator that backs multi-megabyte blocks with anonymous mappings hinted
// toward transparent huge pages. Graph traversal is dominated by random
// probes into a few large flat arrays; on 4 KiB pages every probe risks a
// TLB miss, which roughly doubles traversal time once the arrays outgrow
// the cache. Small blocks fall through to the global heap.
template <class T>
struct BigAllocator {
    using value_type = T;

    BigAllocator() = default;
    template <class U>
    BigAllocator(const BigAllocator<U>&) noexcept {}

    static constexpr std::size_t kHugeBlock = std::size_t(2) << 20;

    static std::size_t rounded_bytes(std::size_t count) {
        return (count * sizeof(T) + kHugeBlock - 1) & ~(kHugeBlock - 1);
    }

    T* allocate(std::size_t count) {
        std::size_t bytes = count * sizeof(T);
#ifdef __linux__
        if (bytes >= kHugeBlock) {
            void* p = ::mmap(nullptr, rounded_bytes(count), PROT_READ | PROT_WRITE,
                             MAP_PRIVATE | MAP_ANONYMOUS, -1, 0);
            if (p == MAP_FAILED)
                throw std::bad_alloc();
            ::madvise(p, rounded_bytes(count), MADV_HUGEPAGE);
            return static_cast<T*>(p);
        }
#endif
        return static_cast<T*>(::operator new(bytes));
    }

    void deallocate(T* p, std::size_t count) noexcept {
#ifdef __linux__
        if (count * sizeof(T) >= kHugeBlock) {
            ::munmap(p, rounded_bytes(count));
            return;
        }
#endif
        ::operator delete(p);
    }

    bool operator==(const BigAllocator&) const { return true; }
};

} // namespace maxwist
