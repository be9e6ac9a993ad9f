/*
 * Copyright 2026 The eagertest Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

package org.beanbin.reflect;

import static org.junit.Assert.assertEquals;

import java.lang.reflect.Method;

import org.junit.Test;

public class EntityUtilsTest {

    @Test
    public void testGetSetter() throws Exception {
        Method getter = EntityUtils.getMethod(IndexedEntity.class, "keywords");
        Method setter = EntityUtils.getSetter(getter);
        assertEquals("setKeywords", setter.getName());

        getter = EntityUtils.getMethod(IndexedEntity.class, "generatedKeywords");
        setter = EntityUtils.getSetter(getter);
        assertEquals(null, setter);
        }
}
