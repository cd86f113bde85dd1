#include "combtile/identities.hpp"

#include <mutex>
#include <utility>

#include "combtile/metatiles.hpp"
#include "combtile/sequences.hpp"

namespace combtile {
namespace {

// Identity evaluation leans on a handful of repeated subexpressions; cache
// them once, thread-safe, keyed by index.
class MemoizedSeq {
 public:
  explicit MemoizedSeq(Int (*fn)(long long)) : fn_(fn) {}

  Int at(long long n) const {
    if (n < 0) return fn_(n);
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<long long>(memo_.size()) <= n) {
      memo_.push_back(fn_(static_cast<long long>(memo_.size())));
    }
    return memo_[static_cast<std::size_t>(n)];
  }

 private:
  Int (*fn_)(long long);
  mutable std::mutex mutex_;
  mutable std::vector<Int> memo_;
};

Int tsq(long long n) {
  static const MemoizedSeq cache(+[](long long k) { Int t = tribonacci(k); return Int(t * t); });
  return cache.at(n);
}

Int fsq(long long n) {
  static const MemoizedSeq cache(+[](long long k) { Int f = fibonacci(k); return Int(f * f); });
  return cache.at(n);
}

Int csq(long long n) {
  static const MemoizedSeq cache(+[](long long k) { Int c = narayana(k); return Int(c * c); });
  return cache.at(n);
}

Int psq(long long n) {
  static const MemoizedSeq cache(+[](long long k) { Int p = padovan(k); return Int(p * p); });
  return cache.at(n);
}

// A(n) = number of {h,f,c} tilings of an n-board; A(n<0) = 0.
Int board_count(long long n) {
  static const MemoizedSeq cache(
      +[](long long k) { return count_tilings(static_cast<int>(k), TileSet::all()); });
  if (n < 0) return 0;
  return cache.at(n);
}

Int delta(long long a, long long b) { return a == b ? 1 : 0; }

bool any_kind(std::span<const TilePlacement> placements, unsigned teeth_bits) {
  for (const TilePlacement& p : placements) {
    if (teeth_bits & (1u << teeth(p.kind))) return true;
  }
  return false;
}

std::vector<IdentityDescriptor> build_registry() {
  std::vector<IdentityDescriptor> reg;

  {
    IdentityDescriptor d;
    d.id = "I-sum";
    d.statement = "T(n)^2 = [n=2] + T(n-1)^2 + 3T(n-2)^2 + 9T(n-3)^2"
                  " + 4*sum_{l=4..n-2} (T(l)+T(l-1)) T(n-l)^2";
    d.lhs = [](long long n, int) { return tsq(n); };
    d.rhs = [](long long n, int, Variant) {
      Int r = delta(n, 2) + tsq(n - 1) + 3 * tsq(n - 2) + 9 * tsq(n - 3);
      for (long long l = 4; l <= n - 2; ++l) {
        r += 4 * (tribonacci(l) + tribonacci(l - 1)) * tsq(n - l);
      }
      return r;
    };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-t2rr";
    d.statement = "T(n)^2 = [n=2]-[n=3]-[n=4]-[n=5] + 2T(n-1)^2 + 3T(n-2)^2"
                  " + 6T(n-3)^2 - T(n-4)^2 - T(n-6)^2";
    d.lhs = [](long long n, int) { return tsq(n); };
    d.rhs = [](long long n, int, Variant) {
      return Int(delta(n, 2) - delta(n, 3) - delta(n, 4) - delta(n, 5) + 2 * tsq(n - 1) +
                 3 * tsq(n - 2) + 6 * tsq(n - 3) - tsq(n - 4) - tsq(n - 6));
    };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-fc";
    d.statement = "T(n+4)^2 = 1 + sum_{k=0..n} { 3T(k+2)^2 + 9T(k+1)^2"
                  " + 4*sum_{i=2..k} (T(k+4-i)+T(k+3-i)) T(i)^2 }   [>=1 fence or comb]";
    d.lhs = [](long long n, int) { return tsq(n + 4); };
    d.rhs = [](long long n, int, Variant) {
      Int r = 1;
      for (long long k = 0; k <= n; ++k) {
        r += 3 * tsq(k + 2) + 9 * tsq(k + 1);
        for (long long i = 2; i <= k; ++i) {
          r += 4 * (tribonacci(k + 4 - i) + tribonacci(k + 3 - i)) * tsq(i);
        }
      }
      return r;
    };
    d.cross_checkable = true;
    d.board_length = [](long long n, int) { return n + 2; };
    d.offset = [](long long, int) { return Int(1); };
    d.predicate = [](int, std::span<const TilePlacement> p) { return any_kind(p, 0b1100); };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-hc";
    d.statement = "T(2(n+1)+j)^2 = 1 + sum_{k=1..n} { T(2k+j+1)^2 + 2T(2k+j)^2 + 9T(2k+j-1)^2"
                  " + 4*sum_{i=0..2k+j-4} (T(2k+j-i)+T(2k+j-i-1)) T(i+2)^2 }   [>=1 h or comb]";
    d.j_values = {0, 1};
    d.lhs = [](long long n, int j) { return tsq(2 * (n + 1) + j); };
    d.rhs = [](long long n, int j, Variant) {
      Int r = 1;
      for (long long k = 1; k <= n; ++k) {
        const long long m = 2 * k + j;
        r += tsq(m + 1) + 2 * tsq(m) + 9 * tsq(m - 1);
        for (long long i = 0; i <= m - 4; ++i) {
          r += 4 * (tribonacci(m - i) + tribonacci(m - i - 1)) * tsq(i + 2);
        }
      }
      return r;
    };
    d.cross_checkable = true;
    d.board_length = [](long long n, int j) { return 2 * n + j; };
    d.offset = [](long long, int j) { return delta(j, 0); };
    d.predicate = [](int, std::span<const TilePlacement> p) { return any_kind(p, 0b1010); };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-hf";
    d.statement = "T(3n+2+j)^2 = 1 + 3[j=2] + sum_{k=1..n} { T(3k+j+1)^2 + 3T(3k+j)^2"
                  " + 4*sum_{i=0..3k+j-3} (T(3k+j-i)+T(3k+j-i-1)) T(i+2)^2 }   [>=1 h or fence;"
                  " as-stated has 3T(2k+j)^2]";
    d.j_values = {0, 1, 2};
    d.has_corrected = true;
    d.lhs = [](long long n, int j) { return tsq(3 * n + 2 + j); };
    d.rhs = [](long long n, int j, Variant v) {
      Int r = 1 + 3 * delta(j, 2);
      for (long long k = 1; k <= n; ++k) {
        const long long m = 3 * k + j;
        r += tsq(m + 1);
        r += 3 * (v == Variant::as_stated ? tsq(2 * k + j) : tsq(m));
        for (long long i = 0; i <= m - 3; ++i) {
          r += 4 * (tribonacci(m - i) + tribonacci(m - i - 1)) * tsq(i + 2);
        }
      }
      return r;
    };
    d.cross_checkable = true;
    d.board_length = [](long long n, int j) { return 3 * n + j; };
    d.offset = [](long long, int j) { return delta(j, 0); };
    d.predicate = [](int, std::span<const TilePlacement> p) { return any_kind(p, 0b0110); };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-mm";
    d.statement = "T(n)^2 = T(n) + sum_{k=2..n-2} sum_{l=2..k}"
                  " {4(T(l)+T(l-1)) - 2[l=2]} T(k-l+2)^2 T(n-k)   [>=1 mixed metatile]";
    d.lhs = [](long long n, int) { return tsq(n); };
    d.rhs = [](long long n, int, Variant) {
      Int r = tribonacci(n);
      for (long long k = 2; k <= n - 2; ++k) {
        Int inner = 0;
        for (long long l = 2; l <= k; ++l) inner += mu(l) * tsq(k - l + 2);
        r += inner * tribonacci(n - k);
      }
      return r;
    };
    d.cross_checkable = true;
    d.board_length = [](long long n, int) { return n - 2; };
    d.offset = [](long long n, int) { return tribonacci(n); };
    d.predicate = [](int cells, std::span<const TilePlacement> p) {
      return contains_mixed_metatile(cells, p);
    };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-c";
    d.statement = "T(n+2)^2 = F(n+1)^2 + sum_{k=3..n} sum_{l=3..k}"
                  " {4(T(l)+T(l-1)) + [l=3] - 2} T(k-l+2)^2 F(n-k+1)^2   [>=1 comb]";
    d.lhs = [](long long n, int) { return tsq(n + 2); };
    d.rhs = [](long long n, int, Variant) {
      Int r = fsq(n + 1);
      for (long long k = 3; k <= n; ++k) {
        Int inner = 0;
        for (long long l = 3; l <= k; ++l) {
          inner += (4 * (tribonacci(l) + tribonacci(l - 1)) + delta(l, 3) - 2) * tsq(k - l + 2);
        }
        r += inner * fsq(n - k + 1);
      }
      return r;
    };
    d.cross_checkable = true;
    d.board_length = [](long long n, int) { return n; };
    d.offset = [](long long n, int) { return fsq(n + 1); };
    d.predicate = [](int, std::span<const TilePlacement> p) { return any_kind(p, 0b1000); };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-f";
    d.statement = "T(n+2)^2 = c(n)^2 + sum_{k=2..n} sum_{l=2..k}"
                  " {4(T(l)+T(l-1)) - [l=2] - 2p(l-1)} T(k-l+2)^2 c(n-k)^2   [>=1 fence]";
    d.lhs = [](long long n, int) { return tsq(n + 2); };
    d.rhs = [](long long n, int, Variant) {
      Int r = csq(n);
      for (long long k = 2; k <= n; ++k) {
        Int inner = 0;
        for (long long l = 2; l <= k; ++l) {
          inner += (4 * (tribonacci(l) + tribonacci(l - 1)) - delta(l, 2) - 2 * padovan(l - 1)) *
                   tsq(k - l + 2);
        }
        r += inner * csq(n - k);
      }
      return r;
    };
    d.cross_checkable = true;
    d.board_length = [](long long n, int) { return n; };
    d.offset = [](long long n, int) { return csq(n); };
    d.predicate = [](int, std::span<const TilePlacement> p) { return any_kind(p, 0b0100); };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-h";
    d.statement = "T(n+2)^2 = p(n)^2 + sum_{k=1..n} sum_{l=1..k}"
                  " {4(T(l)+T(l-1)) + [l=1] - 2[l=2] - 2c(l-5)} T(k-l+2)^2 p(n-k)^2   [>=1 h]";
    d.lhs = [](long long n, int) { return tsq(n + 2); };
    d.rhs = [](long long n, int, Variant) {
      Int r = psq(n);
      for (long long k = 1; k <= n; ++k) {
        Int inner = 0;
        for (long long l = 1; l <= k; ++l) {
          inner += (4 * (tribonacci(l) + tribonacci(l - 1)) + delta(l, 1) - 2 * delta(l, 2) -
                    2 * narayana(l - 5)) *
                   tsq(k - l + 2);
        }
        r += inner * psq(n - k);
      }
      return r;
    };
    d.cross_checkable = true;
    d.board_length = [](long long n, int) { return n; };
    d.offset = [](long long n, int) { return psq(n); };
    d.predicate = [](int, std::span<const TilePlacement> p) { return any_kind(p, 0b0010); };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-TnT";
    d.statement = "T(n+1)T(n) = sum_{l=2..n} (T(l)+T(l-2)) T(n-l+2)^2   [final slots h,f]";
    d.n_min = 2;
    d.lhs = [](long long n, int) { return Int(tribonacci(n + 1) * tribonacci(n)); };
    d.rhs = [](long long n, int, Variant) {
      Int r = 0;
      for (long long l = 2; l <= n; ++l) {
        r += (tribonacci(l) + tribonacci(l - 2)) * tsq(n - l + 2);
      }
      return r;
    };
    d.cross_checkable = true;
    d.board_length = [](long long n, int) { return n; };
    d.offset = [](long long, int) { return Int(0); };
    d.predicate = [](int cells, std::span<const TilePlacement> p) {
      return final_signature(cells, p) == SigmaSignature{1, 2};
    };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "I-T1T1";
    d.statement = "T(n+1)T(n-1) = 2*sum_{l=3..n} T(l-1) T(n-l+2)^2   [final slots h,c]";
    d.n_min = 3;
    d.lhs = [](long long n, int) { return Int(tribonacci(n + 1) * tribonacci(n - 1)); };
    d.rhs = [](long long n, int, Variant) {
      Int r = 0;
      for (long long l = 3; l <= n; ++l) r += tribonacci(l - 1) * tsq(n - l + 2);
      return Int(2 * r);
    };
    d.cross_checkable = true;
    d.board_length = [](long long n, int) { return n; };
    d.offset = [](long long, int) { return Int(0); };
    d.predicate = [](int cells, std::span<const TilePlacement> p) {
      return final_signature(cells, p) == SigmaSignature{1, 3};
    };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "L-An";
    d.statement = "A(n) = [n=0] + A(n-1) + 3A(n-2) + 9A(n-3) + sum_{l=4..n} mu(l) A(n-l),"
                  " A by transfer count";
    d.lhs = [](long long n, int) { return board_count(n); };
    d.rhs = [](long long n, int, Variant) {
      Int r = delta(n, 0) + board_count(n - 1) + 3 * board_count(n - 2) + 9 * board_count(n - 3);
      for (long long l = 4; l <= n; ++l) r += mu(l) * board_count(n - l);
      return r;
    };
    reg.push_back(std::move(d));
  }

  {
    IdentityDescriptor d;
    d.id = "L-mu";
    d.statement = "mu(l) closed form 4(T(l)+T(l-1)) - 2[l=2] equals its recurrence";
    d.lhs = [](long long n, int) { return mu(n); };
    d.rhs = [](long long n, int, Variant) { return mu_by_recurrence(n); };
    reg.push_back(std::move(d));
  }

  return reg;
}

}  // namespace

std::string_view variant_name(Variant v) {
  return v == Variant::as_stated ? "as-stated" : "corrected";
}

const std::vector<IdentityDescriptor>& registry() {
  static const std::vector<IdentityDescriptor> reg = build_registry();
  return reg;
}

const IdentityDescriptor* find_identity(std::string_view id) {
  for (const IdentityDescriptor& d : registry()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

VerificationReport verify(std::string_view id, Variant variant, long long n_max) {
  const IdentityDescriptor* d = find_identity(id);
  if (!d) throw std::invalid_argument("unknown identity id: " + std::string(id));
  const Variant applied =
      (variant == Variant::corrected && !d->has_corrected) ? Variant::as_stated : variant;

  VerificationReport report;
  report.id = d->id;
  report.variant = applied;
  report.mode = CheckMode::statement;
  report.n_min = d->n_min;
  report.n_max = n_max;
  report.j_values = d->j_values;
  report.pass = true;

  const auto start = std::chrono::steady_clock::now();
  const std::vector<int> js = d->j_values.empty() ? std::vector<int>{0} : d->j_values;
  for (int j : js) {
    for (long long n = d->n_min; n <= n_max; ++n) {
      Int lhs = d->lhs(n, j);
      Int rhs = d->rhs(n, j, applied);
      if (lhs != rhs) {
        report.pass = false;
        Counterexample ce;
        ce.n = n;
        if (!d->j_values.empty()) ce.j = j;
        ce.lhs = std::move(lhs);
        ce.rhs = std::move(rhs);
        report.first_counterexample = std::move(ce);
        break;
      }
    }
    if (!report.pass) break;
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

VerificationReport cross_check(std::string_view id, int board_max, int cap) {
  const IdentityDescriptor* d = find_identity(id);
  if (!d) throw std::invalid_argument("unknown identity id: " + std::string(id));
  if (!d->cross_checkable) {
    throw std::invalid_argument("identity " + d->id + " has no enumeration cross-check");
  }
  if (board_max < 0) throw std::invalid_argument("cross_check: board_max must be >= 0");
  if (board_max > cap) throw EnumerationCapExceeded(board_max, cap);
  const Variant applied = d->has_corrected ? Variant::corrected : Variant::as_stated;

  VerificationReport report;
  report.id = d->id;
  report.variant = applied;
  report.mode = CheckMode::cross_check;
  report.n_min = d->n_min;
  report.n_max = board_max;
  report.j_values = d->j_values;
  report.pass = true;

  const auto start = std::chrono::steady_clock::now();
  const std::vector<int> js = d->j_values.empty() ? std::vector<int>{0} : d->j_values;
  for (int j : js) {
    for (long long n = d->n_min;; ++n) {
      const long long board = d->board_length(n, j);
      if (board > board_max) break;
      if (board < 0) continue;
      Int count = 0;
      for_each_tiling(
          static_cast<int>(board), TileSet::all(),
          [&](std::span<const TilePlacement> placements) {
            if (d->predicate(static_cast<int>(board), placements)) ++count;
          },
          cap);
      const Int off = d->offset(n, j);
      Int want_lhs = d->lhs(n, j) - off;
      Int want_rhs = d->rhs(n, j, applied) - off;
      const Int* mismatch = nullptr;
      if (count != want_lhs) {
        mismatch = &want_lhs;
      } else if (count != want_rhs) {
        mismatch = &want_rhs;
      }
      if (mismatch) {
        report.pass = false;
        Counterexample ce;
        ce.n = n;
        if (!d->j_values.empty()) ce.j = j;
        ce.lhs = std::move(count);  // brute-force count
        ce.rhs = *mismatch;         // expected from the identity side
        report.first_counterexample = std::move(ce);
        break;
      }
    }
    if (!report.pass) break;
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace combtile
