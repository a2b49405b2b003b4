# -*- coding: utf-8 -*-
# Upside Travel, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


class CmsError(Exception):
    code = "cms-error"

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_dict(self):
        rendered = {"error": self.code, "message": self.message}
        rendered.update(self.details)
        return rendered


class UsageError(CmsError):
    code = "usage"


class InvalidInput(CmsError):
    code = "invalid-input"


class InvalidWeight(CmsError):
    code = "invalid-weight"


# Raised in strict mode when x_i/(x_i - x_j) applied to an intermediate
# result is not a Laurent polynomial.
class DivisionObstruction(CmsError):
    code = "division-obstruction"

    def __init__(self, i, j, p):
        super().__init__(
            "(x_%d - x_%d) does not divide the order %d intermediate" % (i, j, p),
            i=i,
            j=j,
            p=p,
        )
        self.i = i
        self.j = j
        self.p = p


class ClosureViolation(CmsError):
    code = "closure-violation"


class GroupingMismatch(CmsError):
    code = "grouping-mismatch"


class DecompositionGap(CmsError):
    code = "decomposition-gap"


class InfiniteClass(CmsError):
    code = "infinite-class"


class NotReduced(CmsError):
    code = "not-reduced"


class EnumerationInvalid(CmsError):
    code = "enumeration-invalid"


class NotTypical(CmsError):
    code = "not-typical"
