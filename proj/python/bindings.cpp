// Python bindings for the main operations.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "wqsym/golden.hpp"
#include "wqsym/involution.hpp"
#include "wqsym/json_io.hpp"
#include "wqsym/verify.hpp"

namespace py = pybind11;
using namespace wqsym;

namespace {

PackedWord to_word(const std::vector<int>& letters) { return PackedWord(letters); }

py::dict elem_to_dict(const Elem& x) {
  py::dict d;
  for (const auto& [w, c] : x.terms())
    d[py::str(w.str())] = py::int_(py::str(c.str()));
  return d;
}

py::dict tensor_to_dict(const Tensor2& x) {
  py::dict d;
  for (const auto& [k, c] : x.terms())
    d[py::make_tuple(k.first.str(), k.second.str())] = py::int_(py::str(c.str()));
  return d;
}

BasisTag tag_of(const std::string& name) {
  if (name == "M") return BasisTag::M;
  if (name == "Q") return BasisTag::Q;
  if (name == "R") return BasisTag::R;
  throw std::invalid_argument("basis must be M, Q or R");
}

Elem parse_elem(BasisTag tag, const py::dict& terms) {
  Elem e(tag);
  for (const auto& item : terms) {
    const PackedWord w = PackedWord::parse(py::cast<std::string>(item.first));
    e.add_term(w, Int(py::cast<std::string>(py::str(item.second))));
  }
  return e;
}

std::vector<std::vector<std::string>> matrix_to_lists(const ExactMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    out[r].reserve(m.cols());
    for (int c = 0; c < m.cols(); ++c) out[r].push_back(m.at(r, c).str());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_wqsym, m) {
  m.doc() = "exact computations with packed words and their Hopf algebra";

  m.def("pack", [](const std::vector<int>& w) { return pack(w).letters(); });
  m.def("standardize",
        [](const std::vector<int>& w) { return standardize(w).letters(); });
  m.def("is_packed", [](const std::vector<int>& w) { return PackedWord::is_packed(w); });
  m.def("parse_word",
        [](const std::string& s) { return PackedWord::parse(s).letters(); });
  m.def("word_str", [](const std::vector<int>& w) { return to_word(w).str(); });

  m.def("shifted_concat_left", [](const std::vector<int>& u, const std::vector<int>& v) {
    return shifted_concat_left(to_word(u), to_word(v)).letters();
  });
  m.def("shifted_concat_right", [](const std::vector<int>& u, const std::vector<int>& v) {
    return shifted_concat_right(to_word(u), to_word(v)).letters();
  });
  m.def("global_descents",
        [](const std::vector<int>& w) { return global_descents(to_word(w)); });
  m.def("is_irreducible",
        [](const std::vector<int>& w) { return is_irreducible(to_word(w)); });
  m.def("gd_decompose", [](const std::vector<int>& w) {
    std::vector<std::vector<int>> out;
    for (const PackedWord& f : gd_decompose(to_word(w))) out.push_back(f.letters());
    return out;
  });
  m.def("enumerate_packed_words", [](int n) {
    std::vector<std::vector<int>> out;
    for (const PackedWord& w : enumerate_packed_words(n)) out.push_back(w.letters());
    return out;
  });

  m.def("is_red_irreducible",
        [](const std::vector<int>& w) { return is_red_irreducible(to_word(w)); });
  m.def("is_blue_irreducible",
        [](const std::vector<int>& w) { return is_blue_irreducible(to_word(w)); });
  m.def("red_factorize", [](const std::vector<int>& w) {
    auto [u, v] = red_factorize(to_word(w));
    return py::make_tuple(u.letters(), v.letters());
  });
  m.def("blue_factorize", [](const std::vector<int>& w) {
    auto [u, v] = blue_factorize(to_word(w));
    return py::make_tuple(u.letters(), v.letters());
  });
  m.def("ins", [](const std::vector<int>& u, const std::vector<int>& v) {
    return ins(to_word(u), to_word(v)).letters();
  });
  m.def("insl", [](const std::vector<int>& u, const std::vector<int>& v) {
    return insl(to_word(u), to_word(v)).letters();
  });

  m.def("forest_json", [](const std::vector<int>& w, const std::string& mode,
                          bool skeleton) {
    const PackedWord word = to_word(w);
    BiplaneForest f;
    if (mode == "red")
      f = skeleton ? to_red_skeleton(word) : to_red_forest(word);
    else if (mode == "blue")
      f = skeleton ? to_blue_skeleton(word) : to_blue_forest(word);
    else if (mode == "rb")
      f = to_bicolored(word, Scheme::RedBlue);
    else if (mode == "br")
      f = to_bicolored(word, Scheme::BlueRed);
    else
      throw std::invalid_argument("mode must be red, blue, rb or br");
    return forest_to_json(f).dump();
  }, py::arg("word"), py::arg("mode"), py::arg("skeleton") = false);
  m.def("word_of_forest_json", [](const std::string& j) {
    const BiplaneForest f = forest_from_json(nlohmann::json::parse(j));
    switch (f.scheme) {
      case Scheme::RedSkeleton: return from_red_skeleton(f).letters();
      case Scheme::BlueSkeleton: return from_blue_skeleton(f).letters();
      case Scheme::RedPacked: return from_red_forest(f).letters();
      case Scheme::BluePacked: return from_blue_forest(f).letters();
      default: return from_bicolored(f).letters();
    }
  });

  m.def("half_prec", [](const std::string& basis, const py::dict& x, const py::dict& y) {
    const BasisTag t = tag_of(basis);
    return elem_to_dict(half_prec(parse_elem(t, x), parse_elem(t, y)));
  });
  m.def("half_succ", [](const std::string& basis, const py::dict& x, const py::dict& y) {
    const BasisTag t = tag_of(basis);
    return elem_to_dict(half_succ(parse_elem(t, x), parse_elem(t, y)));
  });
  m.def("product", [](const std::string& basis, const py::dict& x, const py::dict& y) {
    const BasisTag t = tag_of(basis);
    return elem_to_dict(full_product(parse_elem(t, x), parse_elem(t, y)));
  });
  m.def("copr_prec", [](const std::string& basis, const py::dict& x) {
    return tensor_to_dict(copr_prec(parse_elem(tag_of(basis), x)));
  });
  m.def("copr_succ", [](const std::string& basis, const py::dict& x) {
    return tensor_to_dict(copr_succ(parse_elem(tag_of(basis), x)));
  });

  m.def("p_element", [](const std::vector<int>& w) {
    return elem_to_dict(p_element(to_red_forest(to_word(w))));
  });
  m.def("o_element", [](const std::vector<int>& w) {
    return elem_to_dict(o_element(to_blue_forest(to_word(w))));
  });
  m.def("sigma", [](const py::dict& x) {
    return elem_to_dict(sigma(parse_elem(BasisTag::R, x)));
  });
  m.def("sigma_inverse", [](const py::dict& x) {
    return elem_to_dict(sigma_inverse(parse_elem(BasisTag::Q, x)));
  });
  m.def("involution", [](const std::vector<int>& w) {
    return involution_hat(to_word(w)).letters();
  });

  m.def("basis_matrix", [](const std::string& which, int n, const std::string& order) {
    std::vector<PackedWord> words;
    if (order == "grlex") {
      words = enumerate_packed_words(n);
    } else if (order == "paper" && (n == 3 || n == 4)) {
      const auto& strs = n == 3 ? golden::fixture_order3() : golden::fixture_order4();
      for (const auto& s : strs) words.push_back(PackedWord::parse(s));
    } else {
      throw std::invalid_argument("order must be grlex, or paper with n in {3, 4}");
    }
    ExactMatrix m2 = which == "P2R"   ? basis_matrix(BasisTag::P, words)
                     : which == "O2Q" ? basis_matrix(BasisTag::O, words)
                     : which == "Q2R" ? sigma_matrix(words)
                                      : throw std::invalid_argument("which must be P2R, O2Q or Q2R");
    return matrix_to_lists(m2);
  }, py::arg("which"), py::arg("n"), py::arg("order") = "grlex");

  m.def("verify_suite", [](const std::string& suite, int max_size) {
    return verify::run_suite(suite, max_size).to_json().dump();
  }, py::arg("suite") = "all", py::arg("max_size") = 3);
}
