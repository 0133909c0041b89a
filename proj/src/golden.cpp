#include "picenum/golden.hpp"

#include <stdexcept>

namespace picenum::golden {

namespace {

constexpr std::string_view kWeightZero[] = {
    // g = 2
    R"({"terms":[
      {"coeff":"-1/6","exps":{"2":1,"3":1,"6":-1}},
      {"coeff":"-1/2","exps":{"1":2,"3":-1}},
      {"coeff":"-1/3","exps":{"1":3,"2":-2}}]})",
    // g = 3
    R"({"terms":[
      {"coeff":"1/3","exps":{"1":1,"3":1,"6":-1}},
      {"coeff":"-1/3","exps":{"1":4,"2":-3}}]})",
    // g = 4
    R"({"terms":[
      {"coeff":"-1/10","exps":{"2":1,"5":1,"10":-1}},
      {"coeff":"1/2","exps":{"1":1,"2":1,"6":-1}},
      {"coeff":"-1/2","exps":{"1":2,"5":-1}},
      {"coeff":"-1/2","exps":{"1":3,"3":-2}},
      {"coeff":"-2/5","exps":{"1":5,"2":-4}}]})",
    // g = 5
    R"({"terms":[
      {"coeff":"1/5","exps":{"1":1,"5":1,"10":-1}},
      {"coeff":"-1/6","exps":{"2":1,"3":2,"6":-2}},
      {"coeff":"-1/2","exps":{"1":2,"6":-1}},
      {"coeff":"-8/15","exps":{"1":6,"2":-5}}]})",
    // g = 6
    R"({"terms":[
      {"coeff":"-1/14","exps":{"2":1,"7":1,"14":-1}},
      {"coeff":"-1/2","exps":{"1":2,"7":-1}},
      {"coeff":"-1/4","exps":{"2":2,"3":1,"6":-2}},
      {"coeff":"1/3","exps":{"1":1,"3":2,"6":-2}},
      {"coeff":"-3/4","exps":{"1":4,"3":-3}},
      {"coeff":"-16/21","exps":{"1":7,"2":-6}}]})",
    // g = 7
    R"({"terms":[
      {"coeff":"1/7","exps":{"1":1,"7":1,"14":-1}},
      {"coeff":"1","exps":{"1":1,"2":1,"3":1,"6":-2}},
      {"coeff":"-8/7","exps":{"1":8,"2":-7}}]})",
    // g = 8
    R"({"terms":[
      {"coeff":"-1/15","exps":{"3":1,"5":1,"15":-1}},
      {"coeff":"1/2","exps":{"1":1,"2":1,"10":-1}},
      {"coeff":"-2/9","exps":{"2":1,"3":3,"6":-3}},
      {"coeff":"3/4","exps":{"1":1,"2":2,"6":-2}},
      {"coeff":"-1","exps":{"1":2,"3":1,"6":-2}},
      {"coeff":"-5/6","exps":{"1":3,"5":-2}},
      {"coeff":"-27/20","exps":{"1":5,"3":-4}},
      {"coeff":"-16/9","exps":{"1":9,"2":-8}}]})",
    // g = 9
    R"({"terms":[
      {"coeff":"-1/10","exps":{"2":1,"5":2,"10":-2}},
      {"coeff":"-1/2","exps":{"1":2,"10":-1}},
      {"coeff":"-1/2","exps":{"2":2,"3":2,"6":-3}},
      {"coeff":"4/9","exps":{"1":1,"3":3,"6":-3}},
      {"coeff":"-3/2","exps":{"1":2,"2":1,"6":-2}},
      {"coeff":"-128/45","exps":{"1":10,"2":-9}}]})",
};

constexpr std::string_view kTopological[] = {
    // g = 2
    R"({"terms":[
      {"coeff":"2/5","exps":{"1":1,"2":1,"5":1,"10":-1}},
      {"coeff":"1/2","exps":{"1":2,"4":1,"8":-1}},
      {"coeff":"-1/12","exps":{"2":2,"3":2,"6":-2}},
      {"coeff":"1/2","exps":{"1":2,"2":1,"6":-1}},
      {"coeff":"2","exps":{"1":3,"5":-1}},
      {"coeff":"-1/2","exps":{"1":2,"2":2,"4":-2}},
      {"coeff":"-3/4","exps":{"1":4,"3":-2}},
      {"coeff":"-1/15","exps":{"1":6,"2":-4}}]})",
    // g = 3
    R"({"terms":[
      {"coeff":"3/7","exps":{"1":1,"2":1,"7":1,"14":-1}},
      {"coeff":"1/3","exps":{"1":1,"3":1,"4":1,"12":-1}},
      {"coeff":"1/3","exps":{"1":2,"6":1,"12":-1}},
      {"coeff":"2","exps":{"1":2,"3":1,"9":-1}},
      {"coeff":"2","exps":{"1":2,"2":1,"8":-1}},
      {"coeff":"5","exps":{"1":3,"7":-1}},
      {"coeff":"-1/2","exps":{"1":1,"2":2,"3":1,"6":-2}},
      {"coeff":"-1/3","exps":{"1":2,"3":2,"6":-2}},
      {"coeff":"2/3","exps":{"1":2,"2":3,"4":-3}},
      {"coeff":"-4/3","exps":{"1":4,"4":-2}},
      {"coeff":"3/2","exps":{"1":5,"3":-3}},
      {"coeff":"-2/21","exps":{"1":8,"2":-6}}]})",
    // g = 4
    R"({"terms":[
      {"coeff":"1/3","exps":{"1":1,"2":1,"9":1,"18":-1}},
      {"coeff":"1/2","exps":{"1":2,"8":1,"16":-1}},
      {"coeff":"8/15","exps":{"1":1,"3":1,"5":1,"15":-1}},
      {"coeff":"2/3","exps":{"1":1,"2":1,"3":1,"12":-1}},
      {"coeff":"1/2","exps":{"1":2,"4":1,"12":-1}},
      {"coeff":"-1/10","exps":{"2":2,"5":2,"10":-2}},
      {"coeff":"3","exps":{"1":2,"2":1,"10":-1}},
      {"coeff":"3","exps":{"1":3,"9":-1}},
      {"coeff":"-1/2","exps":{"1":2,"4":2,"8":-2}},
      {"coeff":"1/6","exps":{"2":3,"3":2,"6":-3}},
      {"coeff":"4/9","exps":{"1":1,"2":1,"3":3,"6":-3}},
      {"coeff":"-9/4","exps":{"1":2,"2":2,"6":-2}},
      {"coeff":"-2/3","exps":{"1":3,"3":1,"6":-2}},
      {"coeff":"-65/6","exps":{"1":4,"5":-2}},
      {"coeff":"-1","exps":{"1":2,"2":4,"4":-4}},
      {"coeff":"16/3","exps":{"1":4,"2":1,"4":-3}},
      {"coeff":"-99/20","exps":{"1":6,"3":-4}},
      {"coeff":"-8/45","exps":{"1":10,"2":-8}}]})",
};

}  // namespace

std::string_view weight_zero(int g) {
  if (g < 2 || g > 9) throw std::out_of_range("golden::weight_zero: g must be in 2..9");
  return kWeightZero[g - 2];
}

std::string_view topological(int g) {
  if (g < 2 || g > 4) throw std::out_of_range("golden::topological: g must be in 2..4");
  return kTopological[g - 2];
}

}  // namespace picenum::golden
