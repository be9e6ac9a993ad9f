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

package com.eteks.sweethome3d.viewcontroller;

import static org.junit.Assert.*;

import com.eteks.sweethome3d.model.Home;
import com.eteks.sweethome3d.model.UserPreferences;
import com.eteks.sweethome3d.viewcontroller.ContentManager;
import com.eteks.sweethome3d.viewcontroller.View;
import com.eteks.sweethome3d.viewcontroller.ViewFactory;
import org.junit.Test;

public class PhotoController_ESTest {

    @Test
    public void test3()  throws Throwable  {
        Home home0 = new Home();
        PhotoController photoController0 = new PhotoController(home0, (UserPreferences) null, (View) null, (ViewFactory) null, (ContentManager) null);
        assertNotNull(photoController0);

        long long0 = photoController0.getTime();
        assertEquals(1372766400496L, long0);
    }
}
