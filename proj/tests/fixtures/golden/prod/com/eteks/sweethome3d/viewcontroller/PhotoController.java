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

import com.eteks.sweethome3d.model.Home;
import com.eteks.sweethome3d.model.UserPreferences;

public class PhotoController {
    private final Home home;
    private final UserPreferences preferences;
    private final View view;
    private final ViewFactory viewFactory;
    private final ContentManager contentManager;
    private long time;

    public PhotoController(Home home, UserPreferences preferences, View view,
                           ViewFactory viewFactory, ContentManager contentManager) {
        this.home = home;
        this.preferences = preferences;
        this.view = view;
        this.viewFactory = viewFactory;
        this.contentManager = contentManager;
    }

    public long getTime() {
        return this.time;
    }

    public void setTime(long time) {
        this.time = time;
    }

    public Home getHome() {
        return home;
    }
}
