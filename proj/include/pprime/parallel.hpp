#ifndef PPRIME_PARALLEL_HPP
#define PPRIME_PARALLEL_HPP

#if defined(_OPENMP)
#include <omp.h>
#define PPRIME_PRAGMA_HELPER(x) _Pragma(#x)
#define PPRIME_OMP(x) PPRIME_PRAGMA_HELPER(omp x)
#else
#define PPRIME_OMP(x)
#endif

#include <exception>
#include <mutex>

namespace pprime
{

// Number of threads an OpenMP kernel will use (1 without OpenMP).
inline int max_threads()
{
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Selects between the OpenMP kernel and the serial reference implementation.
enum class Execution
{
  Serial,
  Parallel
};

// Exceptions must not escape an OpenMP region; the first one is parked here
// and rethrown once the region has joined.
class ExceptionSlot
{
public:
  template <typename F>
  void run(F &&f) noexcept
  {
    try
    {
      f();
    }
    catch (...)
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (!first_)
      {
        first_ = std::current_exception();
      }
    }
  }

  void rethrow()
  {
    if (first_)
    {
      std::rethrow_exception(first_);
    }
  }

private:
  std::mutex mutex_;
  std::exception_ptr first_;
};

}  // namespace pprime

#endif  // PPRIME_PARALLEL_HPP
