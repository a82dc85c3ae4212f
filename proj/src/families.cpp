#include "reesfb/families.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace reesfb {

  namespace {
    Variable var(std::string_view name) {
      return Variable(name);
    }

    Variable indexed(char prefix, std::size_t i) {
      return Variable(std::string(1, prefix) + std::to_string(i));
    }

    // [Pn] = p1 ... pn, reversed for [nP].
    std::vector<Variable> run(char prefix, std::size_t n, bool backwards = false) {
      std::vector<Variable> result;
      for (std::size_t i = 1; i <= n; ++i) {
        result.push_back(indexed(prefix, backwards ? n + 1 - i : i));
      }
      return result;
    }

    class Builder {
     public:
      Builder& operator<<(Variable x) {
        _letters.push_back(x);
        return *this;
      }
      Builder& operator<<(std::vector<Variable> const& xs) {
        _letters.insert(_letters.end(), xs.begin(), xs.end());
        return *this;
      }
      Builder& operator<<(char const* text) {
        auto w = Word::parse(text);
        _letters.insert(_letters.end(), w.begin(), w.end());
        return *this;
      }
      Word word() const {
        return Word(_letters);
      }

     private:
      std::vector<Variable> _letters;
    };

    void require(bool ok, std::string const& message) {
      if (!ok) {
        throw FamilyError(message);
      }
    }
  }  // namespace

  Identity sigma_mu() {
    return Identity::parse("x[t1]xy[t2]y=x[t1]yx[t2]y");
  }

  Identity sigma_1() {
    return Identity::parse("xy[t1]x[t2]y=yx[t1]x[t2]y");
  }

  Identity sigma_2() {
    return Identity::parse("x[t1]y[t2]xy=x[t1]y[t2]yx");
  }

  IdentitySet basis_A(std::size_t n) {
    require(n >= 1, "basis_A needs n >= 1");
    auto    x = var("x");
    Builder lhs, rhs, power, longer;
    for (std::size_t i = 1; i <= n; ++i) {
      lhs << indexed('t', i) << x;
      rhs << x;
      power << x;
      longer << x;
    }
    rhs << run('t', n);
    longer << x;
    return {Identity(lhs.word(), rhs.word()), Identity(power.word(), longer.word())};
  }

  std::vector<Word> words_A(std::size_t n) {
    require(n >= 1, "words_A needs n >= 1");
    std::set<Word, ShortLex> result;
    auto                     x = var("x");
    for (std::size_t m = 0; m <= n + 1; ++m) {
      // Shapes: n copies of x and m linear slots.
      std::vector<int> shape(n, 0);
      shape.insert(shape.end(), m, 1);
      std::sort(shape.begin(), shape.end());
      do {
        std::vector<Variable> letters;
        std::size_t           t = 0;
        for (int s : shape) {
          letters.push_back(s == 0 ? x : indexed('t', ++t));
        }
        result.insert(canonical_form(Word(std::move(letters))));
      } while (std::next_permutation(shape.begin(), shape.end()));
    }
    return {result.begin(), result.end()};
  }

  namespace {
    Identity first_family(std::size_t row, std::size_t n) {
      require(n >= 2, "witness families need n >= 2");
      auto x = var("x"), z = var("z"), p = var("p"), t = var("t");
      auto Y = run('y', n), nY = run('y', n, true);
      Builder l, r;
      switch (row) {
        case 1:
          l << x << x << Y << nY;
          r << Y << nY << x << x;
          break;
        case 2:
          l << x << z << Y << p << t << z << nY << p << x;
          r << z << Y << p << x << t << x << z << nY << p;
          break;
        default:
          throw FamilyError("no such witness family");
      }
      return Identity(l.word(), r.word());
    }

    Identity second_family(std::size_t row, std::size_t n) {
      require(n >= 2, "witness families need n >= 2");
      auto x = var("x"), y = var("y"), t = var("t");
      Builder l, r;
      switch (row) {
        case 1: {
          // [Zn]^t: a fresh linear variable after each z_i.
          std::vector<Variable> zt;
          for (std::size_t i = 1; i <= n; ++i) {
            zt.push_back(indexed('z', i));
            zt.push_back(indexed('t', i));
          }
          l << zt << y << x << x << run('z', n) << y;
          r << zt << x << x << y << run('z', n) << y;
          break;
        }
        case 2:
          l << x << y << run('z', n) << x << y << t << run('z', n, true);
          r << y << x << run('z', n) << y << x << t << run('z', n, true);
          break;
        case 3:
          l << run('x', n) << run('x', n, true) << run('y', n) << run('y', n, true);
          r << run('y', n) << run('y', n, true) << run('x', n) << run('x', n, true);
          break;
        case 4:
          l << x << y << run('a', n) << y << x << t << run('a', n, true);
          r << y << x << run('a', n) << x << y << t << run('a', n, true);
          break;
        default:
          throw FamilyError("no such witness family");
      }
      return Identity(l.word(), r.word());
    }
  }  // namespace

  Identity nfb_witness(std::string_view case_name, std::size_t n) {
    if (case_name == "N1") {
      return first_family(1, n);
    }
    if (case_name == "N8") {
      return first_family(2, n);
    }
    if (case_name == "N2") {
      return second_family(1, n);
    }
    if (case_name == "N5") {
      return second_family(2, n);
    }
    if (case_name == "N7") {
      return second_family(3, n);
    }
    if (case_name == "N6") {
      return second_family(4, n);
    }
    throw FamilyError("no witness family for case \"" + std::string(case_name) + "\"");
  }

  namespace {
    Word jackson_word(std::size_t n, char const* middle) {
      require(n >= 2, "jackson_w needs n >= 2");
      Builder b;
      b << indexed('x', 0) << middle;
      for (std::size_t i = 1; i <= n; ++i) {
        b << indexed('x', i) << indexed('x', i - 1);
      }
      b << middle << indexed('x', n);
      return b.word();
    }
  }  // namespace

  Word jackson_w(std::size_t n) {
    return jackson_word(n, "zxyp");
  }

  Word jackson_w_prime(std::size_t n) {
    return jackson_word(n, "zyxp");
  }

  Identity jackson(std::size_t n) {
    return Identity(jackson_w(n), jackson_w_prime(n));
  }

  std::vector<Word> open_words(std::size_t part, std::size_t n) {
    auto    x = var("x"), y = var("y");
    auto    A = run('a', n), B = run('b', n), nA = run('a', n, true);
    Builder b;
    switch (part) {
      case 1:
        require(n >= 1, "open words part 1 needs n >= 1");
        b << x << y;
        for (auto a : A) {
          b << a << a;
        }
        b << x << y;
        break;
      case 2:
        require(n >= 1, "open words part 2 needs n >= 1");
        for (std::size_t i = 0; i < n; ++i) {
          b << B[i] << A[i] << B[i];
        }
        b << x << y << A << x << y;
        break;
      case 3:
        require(n >= 1, "open words part 3 needs n >= 1");
        for (std::size_t i = 0; i < n; ++i) {
          b << A[i] << B[i];
        }
        b << x << y << A << x << y << B;
        break;
      case 4:
        require(n >= 1, "open words part 4 needs n >= 1");
        for (std::size_t i = 0; i < n; ++i) {
          b << A[i] << B[i] << B[i];
        }
        b << x << y << A << x << y;
        break;
      case 5:
        require(n >= 2, "open words part 5 needs n >= 2");
        b << x << y << A << x << y << nA;
        break;
      default:
        throw FamilyError("open words have parts 1 to 5");
    }
    auto w = b.word();
    auto r = reverse(w);
    if (r == w) {
      return {w};
    }
    return {w, r};
  }

  IdentitySet basis_F1() {
    return basis_A(3);
  }

  IdentitySet basis_F2() {
    auto s = basis_A(3);
    s.push_back(sigma_1());
    s.push_back(sigma_2());
    return s;
  }

  IdentitySet basis_F3() {
    auto s = basis_A(3);
    s.push_back(sigma_1());
    s.push_back(sigma_mu());
    s.push_back(Identity::parse("xytxy=xytyx"));
    return s;
  }

  IdentitySet basis_F4() {
    auto s = basis_A(3);
    s.push_back(sigma_2());
    s.push_back(sigma_mu());
    s.push_back(Identity::parse("xytxy=yxtxy"));
    return s;
  }

  IdentitySet basis_F5() {
    auto s = basis_A(3);
    s.push_back(sigma_mu());
    s.push_back(Identity::parse("xxyty=yxxty"));
    return s;
  }

  IdentitySet basis_F6() {
    auto s = basis_A(3);
    s.push_back(sigma_mu());
    s.push_back(Identity::parse("ytyxx=ytxxy"));
    return s;
  }

  namespace {
    // Trailing digits of a name like "A3" or "open_4".
    bool split_suffix(std::string_view name, std::string_view prefix, std::size_t& value) {
      if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) {
        return false;
      }
      auto digits = name.substr(prefix.size());
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      return ec == std::errc() && ptr == digits.data() + digits.size();
    }
  }  // namespace

  FamilyOutput generate(std::string_view name, std::size_t n) {
    FamilyOutput out;
    out.name = std::string(name);
    out.n    = n;
    std::size_t k = 0;
    if (name == "sigma_mu") {
      out.identities = {sigma_mu()};
    } else if (name == "sigma_1") {
      out.identities = {sigma_1()};
    } else if (name == "sigma_2") {
      out.identities = {sigma_2()};
    } else if (name == "basis_A") {
      out.identities = basis_A(n);
    } else if (split_suffix(name, "A", k)) {
      out.n          = k;
      out.identities = basis_A(k);
    } else if (name == "words_A") {
      out.words = words_A(n);
    } else if (name.starts_with("witness_")) {
      out.identities = {nfb_witness(name.substr(8), n)};
    } else if (name == "jackson_w") {
      out.identities = {jackson(n)};
      out.words      = {jackson_w(n), jackson_w_prime(n)};
    } else if (split_suffix(name, "open_", k)) {
      out.words = open_words(k, n);
    } else if (split_suffix(name, "basis_F", k)) {
      IdentitySet (*const bases[])() = {basis_F1, basis_F2, basis_F3, basis_F4, basis_F5, basis_F6};
      require(k >= 1 && k <= 6, "bases are basis_F1 to basis_F6");
      out.identities = bases[k - 1]();
    } else {
      throw FamilyError("unknown family \"" + std::string(name) + "\"");
    }
    return out;
  }

  std::vector<std::string> family_names() {
    return {"sigma_mu",   "sigma_1",    "sigma_2",    "basis_A",    "A<n>",       "words_A",
            "witness_N1", "witness_N2", "witness_N5", "witness_N6", "witness_N7", "witness_N8",
            "jackson_w",  "open_1",     "open_2",     "open_3",     "open_4",     "open_5",
            "basis_F1",   "basis_F2",   "basis_F3",   "basis_F4",   "basis_F5",   "basis_F6"};
  }

}  // namespace reesfb
