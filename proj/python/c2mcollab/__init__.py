# Copyright 2026 The c2mcollab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Customer-to-manufacturer collaboration toolkit.

Everything lives in the native extension; this package only re-exports it.
"""

from c2mcollab._c2mcollab import *  # noqa: F401,F403
from c2mcollab._c2mcollab import __doc__, __version__  # noqa: F401
